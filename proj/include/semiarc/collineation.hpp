#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "semiarc/plane.hpp"

namespace semiarc {

enum class GroupKind { kPgl, kPgammal };

const char* group_kind_name(GroupKind kind);  // "pgl" / "pgammal"
GroupKind parse_group_kind(std::string_view text);

// P -> M * frob^k(P). The matrix is row-major and scaled so its first nonzero
// entry is 1.
struct Collineation {
  std::array<Elem, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
  int frob = 0;

  friend bool operator==(const Collineation&, const Collineation&) = default;
};

Collineation normalized(const Field& f, Collineation g);
// Throws std::invalid_argument for a singular matrix or frob outside [0, h).
Collineation make_collineation(const Field& f, const std::array<Elem, 9>& m, int frob = 0);

PointId apply(const Plane& plane, const Collineation& g, PointId p);
PointSet apply(const Plane& plane, const Collineation& g, const PointSet& s);
LineId apply_to_line(const Plane& plane, const Collineation& g, LineId l);

// a after b.
Collineation compose(const Field& f, const Collineation& a, const Collineation& b);
Collineation inverse(const Field& f, const Collineation& g);
// Order of g as a permutation of the points.
int element_order(const Plane& plane, const Collineation& g);

Collineation random_collineation(const Plane& plane, GroupKind kind, std::mt19937_64& rng);

std::uint64_t group_order(int q, GroupKind kind);

// The projectivity sending a, b, c, d to (1:0:0), (0:1:0), (0:0:1), (1:1:1),
// or nothing when three of the points are collinear.
std::optional<Collineation> frame_map(const Plane& plane, PointId a, PointId b, PointId c, PointId d);

// Minimal image of S over an invariant family of frame maps. `optimal` holds
// every enumerated map reaching the minimum; for sets with four points in
// general position it is in bijection with the set stabilizer. Otherwise the
// set lies on a line plus one point, the family only covers the action on S,
// and stab_order accounts for the kernel.
struct Labeling {
  PointSet canonical;
  std::vector<Collineation> optimal;
  std::uint64_t stab_order = 0;
  bool degenerate = false;
};

Labeling canonical_labeling(const Plane& plane, const PointSet& s, GroupKind kind);
PointSet canonical_form(const Plane& plane, const PointSet& s, GroupKind kind);
std::optional<Collineation> are_equivalent(const Plane& plane, const PointSet& a, const PointSet& b, GroupKind kind);

struct StabilizerReport {
  std::uint64_t order = 0;
  std::map<int, std::uint64_t> profile;  // element order -> count
  bool profile_complete = false;
  std::optional<std::string> name;
};

StabilizerReport stabilizer(const Plane& plane, const PointSet& s, GroupKind kind);

// Set stabilizer elements when the set has four points in general position,
// else empty.
std::vector<Collineation> stabilizer_elements(const Plane& plane, const PointSet& s, GroupKind kind);

// Name of a group from the built-in (order, element-order profile) table.
std::optional<std::string> recognize_group(std::uint64_t order, const std::map<int, std::uint64_t>& profile);

}  // namespace semiarc
