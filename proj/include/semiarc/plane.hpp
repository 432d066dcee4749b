#pragma once

#include <array>
#include <span>
#include <vector>

#include "semiarc/field.hpp"
#include "semiarc/point_set.hpp"

namespace semiarc {

// Homogeneous triple; as a point or line it is normalized so the first nonzero
// entry is 1.
using Coords = std::array<Elem, 3>;

// Incidence structure of PG(2,q). Points and lines are numbered in
// lexicographic order of their normalized coordinate triples.
class Plane {
 public:
  static constexpr int kMaxOrder = 13;

  explicit Plane(Field field);
  static Plane of_order(int q) { return Plane(Field::of_order(q)); }

  const Field& field() const noexcept { return field_; }
  int q() const noexcept { return field_.q(); }
  // Number of points, which equals the number of lines.
  int size() const noexcept { return n_; }

  const Coords& point(PointId p) const noexcept { return points_[p]; }
  const Coords& line(LineId l) const noexcept { return lines_[l]; }

  // Any nonzero triple, normalized on lookup. Throws on the zero triple.
  PointId point_id(const Coords& c) const;
  LineId line_id(const Coords& c) const;
  // Unchecked lookup by packed triple (x*q + y)*q + z of a nonzero triple.
  PointId point_id_packed(int packed) const noexcept { return point_of_triple_[packed]; }

  std::span<const LineId> lines_through(PointId p) const noexcept {
    return {pencil_.data() + p * (q() + 1), static_cast<std::size_t>(q() + 1)};
  }
  std::span<const PointId> points_on(LineId l) const noexcept {
    return {range_.data() + l * (q() + 1), static_cast<std::size_t>(q() + 1)};
  }
  const PointSet& line_points(LineId l) const noexcept { return line_masks_[l]; }
  std::span<const PointSet> line_masks() const noexcept { return line_masks_; }
  const PointSet& all_points() const noexcept { return all_; }

  bool incident(PointId p, LineId l) const noexcept { return line_masks_[l].contains(p); }

  // Throws std::invalid_argument when p == r.
  LineId line_through(PointId p, PointId r) const;
  // Throws std::invalid_argument when a == b.
  PointId meet(LineId a, LineId b) const;

  LineId join_unchecked(PointId p, PointId r) const noexcept { return join_[p * n_ + r]; }
  PointId meet_unchecked(LineId a, LineId b) const noexcept { return meet_[a * n_ + b]; }

  bool collinear(PointId a, PointId b, PointId c) const noexcept {
    return a == b || line_masks_[join_[a * n_ + b]].contains(c);
  }

 private:
  Field field_;
  int n_ = 0;
  std::vector<Coords> points_;
  std::vector<Coords> lines_;
  std::vector<PointId> point_of_triple_;
  std::vector<LineId> line_of_triple_;
  std::vector<LineId> pencil_;
  std::vector<PointId> range_;
  std::vector<PointSet> line_masks_;
  std::vector<LineId> join_;
  std::vector<PointId> meet_;
  PointSet all_;
};

}  // namespace semiarc
