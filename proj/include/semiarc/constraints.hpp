#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiarc/semiarc.hpp"

namespace semiarc {

// Size interval for 2-semiarcs in PG(2,q): q <= s <= 1 + floor(q(1 + sqrt(8q-7))/4).
struct SizeBounds {
  int lower = 0;
  int upper = 0;
};
SizeBounds size_bounds(int q);

struct FeasibilityVerdict {
  bool feasible = true;
  std::string reason;
  std::optional<std::pair<int, int>> witness;  // (alpha, beta) with 4 alpha + 3 beta = q + 2
};
// Necessary divisibility conditions for a 2-semiarc of size s. Throws
// std::invalid_argument when s lies outside size_bounds(q).
FeasibilityVerdict size_feasibility(int q, int s);

// Largest k for which a k-secant of a t-semiarc is not ruled out.
int max_secant_length(int q, int t);

// 2t < q-1 and gcd(q, t) = gcd(q-1, t-1) = 1: two (q-t)-secants meeting off
// the set force the set to be their union.
bool union_rule_applies(int q, int t);

// All (x_0..x_max_len) with x_1 = t s and the three counting identities,
// x_i <= caps[i] where given, sorted lexicographically. Where the union rule
// applies, m = q-t and x = x_m also satisfy m x - x(x-1)/2 <= s (pairwise
// meeting m-secants cover that many points).
std::vector<SecantDistribution> enumerate_secant_distributions(int q, int s, int t, int max_len,
                                                               const std::map<int, int>& caps = {});

struct SizeQCensus {
  std::uint64_t labeled_sets = 0;
  std::uint64_t stabilizer_order = 0;
};
// Number of 2-semiarcs of size q in PG(2,q), q = p^h odd, and the common
// stabilizer order h q (q-1). Throws std::invalid_argument for even q.
SizeQCensus expected_size_q_census(int q, int h);

}  // namespace semiarc
