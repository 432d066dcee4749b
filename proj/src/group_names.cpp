#include <vector>

#include "semiarc/collineation.hpp"

namespace semiarc {

namespace {

struct Fingerprint {
  std::uint64_t order;
  std::map<int, std::uint64_t> profile;
  const char* name;
};

// Generated by tools/group_fingerprints.py. No two rows share a fingerprint.
const std::vector<Fingerprint>& table() {
  static const std::vector<Fingerprint> rows = {
    {1, {{1, 1}}, "Z1"},
    {2, {{1, 1}, {2, 1}}, "Z2"},
    {3, {{1, 1}, {3, 2}}, "Z3"},
    {4, {{1, 1}, {2, 1}, {4, 2}}, "Z4"},
    {4, {{1, 1}, {2, 3}}, "Z2^2"},
    {6, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}, "Z6"},
    {6, {{1, 1}, {2, 3}, {3, 2}}, "S3"},
    {8, {{1, 1}, {2, 3}, {4, 4}}, "Z2 × Z4"},
    {8, {{1, 1}, {2, 5}, {4, 2}}, "D4"},
    {8, {{1, 1}, {2, 7}}, "Z2^3"},
    {9, {{1, 1}, {3, 8}}, "Z3^2"},
    {12, {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}, "Z12"},
    {12, {{1, 1}, {2, 3}, {3, 8}}, "A4"},
    {12, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, "D6"},
    {16, {{1, 1}, {2, 3}, {4, 12}}, "Z4 × Z4"},
    {16, {{1, 1}, {2, 9}, {4, 2}, {8, 4}}, "D8"},
    {16, {{1, 1}, {2, 11}, {4, 4}}, "D4 × Z2"},
    {18, {{1, 1}, {2, 3}, {3, 8}, {6, 6}}, "S3 × Z3"},
    {20, {{1, 1}, {2, 5}, {4, 10}, {5, 4}}, "Z5 ⋊ Z4"},
    {24, {{1, 1}, {2, 5}, {3, 2}, {4, 2}, {6, 10}, {12, 4}}, "D4 × Z3"},
    {24, {{1, 1}, {2, 7}, {3, 2}, {4, 8}, {6, 2}, {12, 4}}, "S3 × Z4"},
    {24, {{1, 1}, {2, 7}, {3, 8}, {6, 8}}, "A4 × Z2"},
    {24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, "S4"},
    {36, {{1, 1}, {2, 7}, {3, 8}, {6, 20}}, "Z6 × S3"},
    {42, {{1, 1}, {2, 7}, {3, 14}, {6, 14}, {7, 6}}, "(Z7 ⋊ Z3) ⋊ Z2"},
    {48, {{1, 1}, {2, 19}, {3, 8}, {4, 12}, {6, 8}}, "Z2 × S4"},
    {96, {{1, 1}, {2, 7}, {3, 32}, {4, 24}, {6, 32}}, "((Z4 × Z4) ⋊ Z3) ⋊ Z2"},
    {96, {{1, 1}, {2, 39}, {3, 2}, {4, 8}, {6, 18}, {8, 16}, {12, 4}, {24, 8}}, "D8 × S3"},
    {110, {{1, 1}, {2, 11}, {5, 44}, {10, 44}, {11, 10}}, "(Z11 ⋊ Z5) ⋊ Z2"},
    {144, {{1, 1}, {2, 21}, {3, 8}, {4, 54}, {6, 24}, {8, 36}}, "((Z3 × Z3) ⋊ Z8) ⋊ Z2"},
    {156, {{1, 1}, {2, 13}, {3, 26}, {4, 26}, {6, 26}, {12, 52}, {13, 12}}, "(Z13 ⋊ Z4) ⋊ Z3"},
    {168, {{1, 1}, {2, 7}, {3, 56}, {6, 56}, {7, 48}}, "Z2^3 ⋊ (Z7 ⋊ Z3)"},
    {336, {{1, 1}, {2, 43}, {3, 56}, {4, 84}, {6, 56}, {7, 48}, {14, 48}}, "PSL(3,2) × Z2"},
  };
  return rows;
}

}  // namespace

std::optional<std::string> recognize_group(std::uint64_t order, const std::map<int, std::uint64_t>& profile) {
  for (const Fingerprint& f : table())
    if (f.order == order && f.profile == profile) return std::string(f.name);
  return std::nullopt;
}

}  // namespace semiarc
