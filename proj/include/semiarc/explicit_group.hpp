#pragma once

#include <cstddef>
#include <vector>

#include "semiarc/collineation.hpp"

namespace semiarc {

// Every element of PGL(3,q) or PΓL(3,q) stored as a point permutation. Only
// for small planes; used by the brute-force oracle and for stabilizer
// profiles of sets the labeling cannot enumerate directly.
class ExplicitGroup {
 public:
  static constexpr std::size_t kMaxElements = 400000;

  ExplicitGroup(const Plane& plane, GroupKind kind);
  // Shared instance per (field, kind); thread-safe.
  static const ExplicitGroup& get(const Plane& plane, GroupKind kind);

  std::size_t size() const noexcept { return count_; }
  int degree() const noexcept { return n_; }
  const PointId* perm(std::size_t i) const noexcept { return perms_.data() + i * n_; }
  const Collineation& element(std::size_t i) const noexcept { return elements_[i]; }

  PointSet image(std::size_t i, const PointSet& s) const;
  bool maps_onto(std::size_t i, const PointSet& from, const PointSet& to) const;
  int element_order(std::size_t i) const;

 private:
  int n_ = 0;
  std::size_t count_ = 0;
  std::vector<PointId> perms_;
  std::vector<Collineation> elements_;
};

}  // namespace semiarc
