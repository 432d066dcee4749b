#include "semiarc/plane.hpp"

#include <stdexcept>
#include <string>

namespace semiarc {

namespace {

bool normalized(const Coords& c) {
  for (Elem v : c)
    if (v != 0) return v == 1;
  return false;
}

}  // namespace

Plane::Plane(Field field) : field_(std::move(field)) {
  const int q = field_.q();
  if (q > kMaxOrder) throw std::invalid_argument("PG(2," + std::to_string(q) + ") exceeds the supported order 13");
  n_ = q * q + q + 1;

  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        const Coords c{static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)};
        if (normalized(c)) points_.push_back(c);
      }
  lines_ = points_;

  // Every nonzero triple maps to the id of its projective class.
  point_of_triple_.assign(q * q * q, 0);
  for (int id = 0; id < n_; ++id) {
    const Coords& c = points_[id];
    for (int s = 1; s < q; ++s) {
      const Elem x = field_.mul(c[0], static_cast<Elem>(s));
      const Elem y = field_.mul(c[1], static_cast<Elem>(s));
      const Elem z = field_.mul(c[2], static_cast<Elem>(s));
      point_of_triple_[(x * q + y) * q + z] = static_cast<PointId>(id);
    }
  }
  line_of_triple_ = point_of_triple_;

  line_masks_.assign(n_, PointSet{});
  pencil_.reserve(n_ * (q + 1));
  range_.reserve(n_ * (q + 1));
  for (int l = 0; l < n_; ++l) {
    const Coords& a = lines_[l];
    for (int p = 0; p < n_; ++p) {
      const Coords& c = points_[p];
      const Elem dot = field_.add(field_.add(field_.mul(a[0], c[0]), field_.mul(a[1], c[1])), field_.mul(a[2], c[2]));
      if (dot == 0) {
        line_masks_[l].insert(static_cast<PointId>(p));
        range_.push_back(static_cast<PointId>(p));
      }
    }
  }
  for (int p = 0; p < n_; ++p) {
    all_.insert(static_cast<PointId>(p));
    for (int l = 0; l < n_; ++l)
      if (line_masks_[l].contains(static_cast<PointId>(p))) pencil_.push_back(static_cast<LineId>(l));
  }

  join_.assign(n_ * n_, 0);
  meet_.assign(n_ * n_, 0);
  for (int l = 0; l < n_; ++l) {
    auto pts = points_on(static_cast<LineId>(l));
    for (PointId a : pts)
      for (PointId b : pts)
        if (a != b) join_[a * n_ + b] = static_cast<LineId>(l);
  }
  for (int p = 0; p < n_; ++p) {
    auto ls = lines_through(static_cast<PointId>(p));
    for (LineId a : ls)
      for (LineId b : ls)
        if (a != b) meet_[a * n_ + b] = static_cast<PointId>(p);
  }
}

PointId Plane::point_id(const Coords& c) const {
  const int q = this->q();
  for (Elem v : c)
    if (v >= q) throw std::invalid_argument("coordinate outside the field");
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw std::invalid_argument("the zero triple is not a point");
  return point_of_triple_[(c[0] * q + c[1]) * q + c[2]];
}

LineId Plane::line_id(const Coords& c) const {
  const int q = this->q();
  for (Elem v : c)
    if (v >= q) throw std::invalid_argument("coordinate outside the field");
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw std::invalid_argument("the zero triple is not a line");
  return line_of_triple_[(c[0] * q + c[1]) * q + c[2]];
}

LineId Plane::line_through(PointId p, PointId r) const {
  if (p >= n_ || r >= n_) throw std::out_of_range("point id out of range");
  if (p == r) throw std::invalid_argument("line_through needs two distinct points");
  return join_[p * n_ + r];
}

PointId Plane::meet(LineId a, LineId b) const {
  if (a >= n_ || b >= n_) throw std::out_of_range("line id out of range");
  if (a == b) throw std::invalid_argument("meet needs two distinct lines");
  return meet_[a * n_ + b];
}

}  // namespace semiarc
