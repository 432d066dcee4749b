#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "semiarc/explicit_group.hpp"
#include "semiarc/kernels.hpp"
#include "semiarc/search.hpp"

namespace semiarc {

namespace {

bool by_size_then_points(const ClassificationRecord& a, const ClassificationRecord& b) {
  return a.size != b.size ? a.size < b.size : lex_less(a.points, b.points);
}

}  // namespace

ClassificationReport brute_force_classify(const Plane& plane, int t, int max_size, GroupKind group) {
  const auto start = std::chrono::steady_clock::now();
  if (plane.q() > 5) throw std::invalid_argument("brute force is limited to q <= 5");
  const int n = plane.size();
  max_size = std::min(max_size, n);
  ClassificationReport rep;
  rep.q = plane.q();
  rep.t = t;
  rep.group = group;
  rep.stats.isa = kernels::isa_name(kernels::active_isa());

  // Every admissible subset, by adding points in increasing order.
  std::vector<PointSet> semiarcs;
  IncidenceCounter c(plane);
  const auto& counts = c.line_counts();
  std::function<void(int)> rec = [&](int next) {
    if (c.size() > 0 && c.is_t_semiarc(t)) semiarcs.push_back(c.members());
    if (c.size() >= max_size) return;
    for (int p = next; p < n; ++p) {
      int own = 0;
      bool ok = true;
      for (LineId l : plane.lines_through(static_cast<PointId>(p))) {
        if (counts[l] == 0) ++own;
        if (counts[l] == 1 && c.tangents(c.line_single(l)) <= t) ok = false;
      }
      if (!ok || own < t) continue;
      c.insert(static_cast<PointId>(p));
      ++rep.stats.nodes;
      rec(p + 1);
      c.erase(static_cast<PointId>(p));
    }
  };
  rec(0);

  const ExplicitGroup& g = ExplicitGroup::get(plane, group);
  std::unordered_set<PointSet, PointSetHash> marked;
  for (const PointSet& s : semiarcs) {
    ++rep.stats.labeled_counts[s.size()];
    if (marked.count(s)) continue;
    std::uint64_t stab = 0;
    std::map<int, std::uint64_t> profile;
    std::unordered_set<PointSet, PointSetHash> orbit;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const PointSet img = g.image(i, s);
      orbit.insert(img);
      if (img == s) {
        ++stab;
        ++profile[g.element_order(i)];
      }
    }
    if (stab * orbit.size() != g.size()) throw std::logic_error("orbit-stabilizer mismatch in brute force");
    marked.insert(orbit.begin(), orbit.end());
    ClassificationRecord r = make_record(plane, s, group);
    StabilizerReport& own = group == GroupKind::kPgl ? r.stab_pgl : r.stab_pgammal;
    own.order = stab;
    own.profile = profile;
    own.profile_complete = true;
    own.name = recognize_group(stab, profile);
    if (plane.field().h() == 1) r.stab_pgammal = r.stab_pgl = own;
    rep.records.push_back(std::move(r));
  }
  std::sort(rep.records.begin(), rep.records.end(), by_size_then_points);
  std::set<int> present;
  for (const auto& r : rep.records) present.insert(r.size);
  for (int s = 1; s <= max_size; ++s)
    rep.sizes.push_back({s, present.count(s) ? SizeOutcome::kFound : SizeOutcome::kNone, ""});
  rep.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace semiarc
