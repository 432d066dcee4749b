#pragma once

#include <cstdint>
#include <vector>

#include "semiarc/plane.hpp"

namespace semiarc {

// x[i] = number of lines meeting the set in exactly i points, i = 0..q+1.
using SecantDistribution = std::vector<int>;

// Throws std::invalid_argument when p is not in s.
int tangent_count(const Plane& plane, const PointSet& s, PointId p);
// Both throw std::invalid_argument on an empty set.
bool is_t_semiarc(const Plane& plane, const PointSet& s, int t);
bool is_admissible(const Plane& plane, const PointSet& s, int t);

SecantDistribution secant_distribution(const Plane& plane, const PointSet& s);
// Sum x_i, sum i x_i and sum i(i-1) x_i match the plane and |s|.
bool distribution_identities_hold(int q, int s, const SecantDistribution& x);

// Every point lies on exactly q+1-t secants. Throws std::invalid_argument
// unless s is a t-semiarc.
bool design_check(const Plane& plane, const PointSet& s, int t);

// Per-line member counts and per-point tangent counts kept up to date under
// insertion and removal.
class IncidenceCounter {
 public:
  explicit IncidenceCounter(const Plane& plane);

  void insert(PointId p);
  void erase(PointId p);
  void clear();
  void assign(const PointSet& s);

  const PointSet& members() const noexcept { return members_; }
  int size() const noexcept { return size_; }
  int line_count(LineId l) const noexcept { return line_count_[l]; }
  const std::vector<std::uint8_t>& line_counts() const noexcept { return line_count_; }
  // Tangents at p for p in the set.
  int tangents(PointId p) const noexcept { return tangents_[p]; }
  // The member on line l when line_count(l) == 1.
  PointId line_single(LineId l) const noexcept { return single_[l]; }
  bool is_t_semiarc(int t) const;
  int max_line_count() const noexcept;

 private:
  const Plane& plane_;
  PointSet members_;
  int size_ = 0;
  std::vector<std::uint8_t> line_count_;
  std::vector<std::uint8_t> tangents_;
  std::vector<PointId> single_;  // the member on a line with count 1
};

}  // namespace semiarc
