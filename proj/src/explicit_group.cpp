#include "semiarc/explicit_group.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace semiarc {

ExplicitGroup::ExplicitGroup(const Plane& plane, GroupKind kind) : n_(plane.size()) {
  const std::uint64_t order = group_order(plane.q(), kind);
  if (order > kMaxElements) throw std::invalid_argument("group too large to enumerate explicitly");
  const Field& f = plane.field();
  const int q = f.q();
  const int hk = kind == GroupKind::kPgammal ? f.h() : 1;
  perms_.reserve(order * n_);
  elements_.reserve(order);
  // Normalized matrices: the first nonzero entry is 1.
  std::array<Elem, 9> m{};
  long long combos = 1;
  for (int i = 0; i < 9; ++i) combos *= q;
  for (long long code = 0; code < combos; ++code) {
    long long c = code;
    for (int i = 8; i >= 0; --i) {
      m[i] = static_cast<Elem>(c % q);
      c /= q;
    }
    int lead = 0;
    while (lead < 9 && m[lead] == 0) ++lead;
    if (lead == 9 || m[lead] != 1) continue;
    Collineation g;
    try {
      g = make_collineation(f, m, 0);
    } catch (const std::invalid_argument&) {
      continue;
    }
    for (int k = 0; k < hk; ++k) {
      g.frob = k;
      elements_.push_back(g);
      for (int p = 0; p < n_; ++p) perms_.push_back(apply(plane, g, static_cast<PointId>(p)));
    }
  }
  count_ = elements_.size();
  if (count_ != order) throw std::logic_error("explicit group enumeration has the wrong order");
}

const ExplicitGroup& ExplicitGroup::get(const Plane& plane, GroupKind kind) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::vector<int>, int>, std::unique_ptr<ExplicitGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(plane.q(), plane.field().spec().modulus, static_cast<int>(kind));
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<ExplicitGroup>(plane, kind);
  return *slot;
}

PointSet ExplicitGroup::image(std::size_t i, const PointSet& s) const {
  const PointId* p = perm(i);
  PointSet out;
  s.for_each([&](PointId x) { out.insert(p[x]); });
  return out;
}

bool ExplicitGroup::maps_onto(std::size_t i, const PointSet& from, const PointSet& to) const {
  const PointId* p = perm(i);
  bool ok = true;
  from.for_each([&](PointId x) { ok = ok && to.contains(p[x]); });
  return ok && from.size() == to.size();
}

int ExplicitGroup::element_order(std::size_t i) const {
  const PointId* p = perm(i);
  std::vector<char> seen(n_, 0);
  long long order = 1;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int j = s; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, static_cast<long long>(len));
  }
  return static_cast<int>(order);
}

}  // namespace semiarc
