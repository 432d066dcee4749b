#include "semiarc/semiarc.hpp"

#include <algorithm>
#include <stdexcept>

#include "semiarc/kernels.hpp"

namespace semiarc {

namespace {

std::vector<std::uint8_t> counts_of(const Plane& plane, const PointSet& s) {
  std::vector<std::uint8_t> counts(plane.size());
  kernels::line_counts(plane.line_masks(), s, counts);
  return counts;
}

int tangents_at(const Plane& plane, const std::vector<std::uint8_t>& counts, PointId p) {
  int t = 0;
  for (LineId l : plane.lines_through(p)) t += counts[l] == 1;
  return t;
}

}  // namespace

int tangent_count(const Plane& plane, const PointSet& s, PointId p) {
  if (p >= plane.size() || !s.contains(p)) throw std::invalid_argument("tangent_count: point not in the set");
  int t = 0;
  for (LineId l : plane.lines_through(p)) t += plane.line_points(l).intersection_size(s) == 1;
  return t;
}

bool is_t_semiarc(const Plane& plane, const PointSet& s, int t) {
  if (s.empty()) throw std::invalid_argument("a semiarc is nonempty");
  const auto counts = counts_of(plane, s);
  bool ok = true;
  s.for_each([&](PointId p) { ok = ok && tangents_at(plane, counts, p) == t; });
  return ok;
}

bool is_admissible(const Plane& plane, const PointSet& s, int t) {
  if (s.empty()) throw std::invalid_argument("admissibility needs a nonempty set");
  const auto counts = counts_of(plane, s);
  bool ok = true;
  s.for_each([&](PointId p) { ok = ok && tangents_at(plane, counts, p) >= t; });
  return ok;
}

SecantDistribution secant_distribution(const Plane& plane, const PointSet& s) {
  SecantDistribution x(plane.q() + 2, 0);
  for (std::uint8_t c : counts_of(plane, s)) ++x[c];
  return x;
}

bool distribution_identities_hold(int q, int s, const SecantDistribution& x) {
  long long n = 0, first = 0, second = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    n += x[i];
    first += static_cast<long long>(i) * x[i];
    second += static_cast<long long>(i) * (static_cast<long long>(i) - 1) * x[i];
  }
  return n == q * q + q + 1 && first == static_cast<long long>(q + 1) * s &&
         second == static_cast<long long>(s) * (s - 1);
}

bool design_check(const Plane& plane, const PointSet& s, int t) {
  if (s.empty() || !is_t_semiarc(plane, s, t)) throw std::invalid_argument("design_check needs a t-semiarc");
  const auto counts = counts_of(plane, s);
  const int r = plane.q() + 1 - t;
  bool ok = true;
  s.for_each([&](PointId p) {
    int secants = 0;
    for (LineId l : plane.lines_through(p)) secants += counts[l] >= 2;
    ok = ok && secants == r;
  });
  return ok;
}

IncidenceCounter::IncidenceCounter(const Plane& plane)
    : plane_(plane), line_count_(plane.size(), 0), tangents_(plane.size(), 0), single_(plane.size(), 0) {}

void IncidenceCounter::clear() {
  members_ = PointSet{};
  size_ = 0;
  std::fill(line_count_.begin(), line_count_.end(), 0);
  std::fill(tangents_.begin(), tangents_.end(), 0);
}

void IncidenceCounter::assign(const PointSet& s) {
  clear();
  s.for_each([&](PointId p) { insert(p); });
}

bool IncidenceCounter::is_t_semiarc(int t) const {
  if (size_ == 0) return false;
  bool ok = true;
  members_.for_each([&](PointId p) { ok = ok && tangents_[p] == t; });
  return ok;
}

void IncidenceCounter::insert(PointId p) {
  if (members_.contains(p)) return;
  members_.insert(p);
  ++size_;
  int own = 0;
  for (LineId l : plane_.lines_through(p)) {
    const int c = ++line_count_[l];
    if (c == 1) {
      single_[l] = p;
      ++own;
    } else if (c == 2) {
      --tangents_[single_[l]];
    }
  }
  tangents_[p] = static_cast<std::uint8_t>(own);
}

void IncidenceCounter::erase(PointId p) {
  if (!members_.contains(p)) return;
  members_.erase(p);
  --size_;
  for (LineId l : plane_.lines_through(p)) {
    const int c = --line_count_[l];
    if (c == 1) {
      // Find the remaining member; it regains this tangent.
      const PointSet rest = plane_.line_points(l) & members_;
      const PointId r = static_cast<PointId>(rest.first());
      single_[l] = r;
      ++tangents_[r];
    }
  }
  tangents_[p] = 0;
}

int IncidenceCounter::max_line_count() const noexcept {
  return *std::max_element(line_count_.begin(), line_count_.end());
}

}  // namespace semiarc
