#include "semiarc/search.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <filesystem>
#include <functional>
#include <memory>
#include <fstream>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "semiarc/constraints.hpp"
#include "semiarc/kernels.hpp"

namespace semiarc {

std::map<int, int> ClassificationReport::counts() const {
  std::map<int, int> out;
  for (const ClassificationRecord& r : records) ++out[r.size];
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix2(std::uint64_t a, std::uint64_t b) { return mix(a * 0x100000001b3ULL ^ mix(b)); }

int effective_max_len(int q, int t, bool long_secant) {
  if (!long_secant || t >= q) return q + 1;
  return max_secant_length(q, t);
}

struct TargetInfo {
  int size = 0;
  int longest = 0;           // longest secant in any solution
  std::vector<int> cap_ge;   // cap_ge[k] = max over solutions of sum_{i>=k} x_i
};

struct WorkerState {
  explicit WorkerState(const Plane& plane) : counter(plane) {}
  IncidenceCounter counter;
  std::vector<PointSet> found;
  SearchStats stats;
};

bool sorted_before(const PointSet& a, const PointSet& b) {
  const int sa = a.size(), sb = b.size();
  return sa != sb ? sa < sb : lex_less(a, b);
}

class Engine {
 public:
  // `pure` ignores targets and prunes: every admissible set is a node.
  Engine(const Plane& plane, const SearchConfig& config, const std::vector<int>& targets, bool pure)
      : plane_(plane), config_(config), q_(plane.q()), n_(plane.size()), t_(config.t), pure_(pure) {
    const PruneFlags& pf = config.prune;
    max_len_ = pure ? q_ + 1 : effective_max_len(q_, t_, pf.long_secant);
    union_rule_ = !pure && pf.long_secant && union_rule_applies(q_, t_);
    is_target_.assign(n_ + 2, 0);
    for (int size : targets) {
      is_target_[size] = 1;
      max_target_ = std::max(max_target_, size);
      TargetInfo info;
      info.size = size;
      info.cap_ge.assign(q_ + 3, 0);
      if (!pure && pf.distribution) {
        const auto sols = enumerate_secant_distributions(q_, size, t_, std::max(1, max_len_));
        for (const auto& x : sols) {
          int acc = 0;
          for (int k = static_cast<int>(x.size()) - 1; k >= 0; --k) {
            acc += x[k];
            info.cap_ge[k] = std::max(info.cap_ge[k], acc);
            if (x[k] > 0) info.longest = std::max(info.longest, k);
          }
        }
      } else {
        info.longest = max_len_;
        std::fill(info.cap_ge.begin(), info.cap_ge.end(), n_);
      }
      targets_.push_back(info);
    }
    std::sort(targets_.begin(), targets_.end(), [](const TargetInfo& a, const TargetInfo& b) { return a.size < b.size; });
    if (pure) max_target_ = n_;
  }

  int max_target() const { return max_target_; }
  bool is_target(int size) const { return size < static_cast<int>(is_target_.size()) && is_target_[size]; }

  // Points whose addition keeps the set extendable to a target semiarc.
  // Returns false when the node has no children.
  bool evaluate(const IncidenceCounter& c, PointSet& avail, SearchStats& st) const {
    avail = PointSet{};
    const int s = c.size();
    if (s >= max_target_) return false;
    const auto& counts = c.line_counts();
    const PointSet& members = c.members();
    int maxlen = max_len_;
    int need = 0;
    int min_viable = INT_MAX;
    const bool structural = !pure_ && config_.prune.structural;

    if (!pure_) {
      if (union_rule_) {
        std::vector<LineId> full;
        for (int l = 0; l < n_; ++l)
          if (counts[l] == q_ - t_) full.push_back(static_cast<LineId>(l));
        for (std::size_t i = 0; i < full.size(); ++i)
          for (std::size_t j = i + 1; j < full.size(); ++j) {
            const PointId x = plane_.meet_unchecked(full[i], full[j]);
            if (members.contains(x)) continue;
            // Any semiarc containing the set is the union of the two lines'
            // members, which are all present already.
            ++st.pruned_long_secant;
            return false;
          }
      }
      std::array<int, 16> ge{};
      for (int l = 0; l < n_; ++l) ++ge[counts[l]];
      for (int k = 14; k >= 0; --k) ge[k] += ge[k + 1];
      if (structural) members.for_each([&](PointId p) { need = std::max(need, c.tangents(p) - t_); });
      int best_len = 0;
      bool by_size = false;
      for (const TargetInfo& ti : targets_) {
        if (ti.size <= s) continue;
        by_size = true;
        if (structural && s + need > ti.size) continue;
        bool ok = true;
        for (int k = 1; k <= q_ + 1 && ok; ++k) ok = ge[k] <= ti.cap_ge[k];
        if (!ok) continue;
        best_len = std::max(best_len, ti.longest);
        min_viable = std::min(min_viable, ti.size);
      }
      if (min_viable == INT_MAX) {
        if (by_size) {
          if (structural && std::none_of(targets_.begin(), targets_.end(),
                                         [&](const TargetInfo& ti) { return ti.size > s && s + need <= ti.size; }))
            ++st.pruned_structural;
          else
            ++st.pruned_distribution;
        }
        return false;
      }
      maxlen = std::min(maxlen, best_len);
    }

    PointSet blocked = members;
    for (int l = 0; l < n_; ++l) {
      const int cnt = counts[l];
      if (cnt >= maxlen || (cnt == 1 && c.tangents(c.line_single(static_cast<LineId>(l))) <= t_))
        blocked |= plane_.line_points(static_cast<LineId>(l));
    }
    const PointSet cand = plane_.all_points() - blocked;
    cand.for_each([&](PointId p) {
      int own = 0;
      for (LineId l : plane_.lines_through(p)) own += counts[l] == 0;
      if (own >= t_) avail.insert(p);
    });
    if (avail.empty()) return false;

    if (structural) {
      const int av = avail.size();
      bool dead = av < need || s + av < min_viable;
      if (!dead) {
        members.for_each([&](PointId p) {
          if (dead || c.tangents(p) <= t_) return;
          int fixed = 0;
          for (LineId l : plane_.lines_through(p))
            if (counts[l] == 1 && plane_.line_points(l).intersection_size(avail) == 0) ++fixed;
          dead = fixed > t_;
        });
      }
      if (dead) {
        ++st.pruned_structural;
        return false;
      }
    }
    return true;
  }

  Labeling label(const IncidenceCounter& c, SearchStats& st) const {
    ++st.labelings;
    return canonical_labeling(plane_, c.members(), config_.group);
  }

  // McKay acceptance of the child in `c` produced by adding `added`.
  bool accept(const IncidenceCounter& c, PointId added, Labeling& lab, bool& have_lab, SearchStats& st) const {
    const PointSet& members = c.members();
    const auto& counts = c.line_counts();
    std::array<std::uint64_t, 256> d0;
    std::uint64_t best = 0;
    members.for_each([&](PointId p) {
      std::uint64_t h = 0;
      for (LineId l : plane_.lines_through(p)) h += mix(counts[l]);
      d0[p] = h;
      best = std::max(best, h);
    });
    if (d0[added] != best) return false;
    PointSet cls;
    members.for_each([&](PointId p) {
      if (d0[p] == best) cls.insert(p);
    });
    if (cls.size() == 1) return true;

    std::vector<std::uint64_t> acc(n_, 0);
    members.for_each([&](PointId p) {
      for (LineId l : plane_.lines_through(p))
        if (counts[l] >= 2) acc[l] += mix(d0[p]);
    });
    std::array<std::uint64_t, 256> d1;
    std::uint64_t best1 = 0;
    cls.for_each([&](PointId p) {
      std::uint64_t h = 0;
      for (LineId l : plane_.lines_through(p))
        if (counts[l] >= 2) h += mix2(counts[l], acc[l]);
      d1[p] = mix2(d0[p], h);
      best1 = std::max(best1, d1[p]);
    });
    if (d1[added] != best1) return false;
    PointSet cls1;
    cls.for_each([&](PointId p) {
      if (d1[p] == best1) cls1.insert(p);
    });
    if (cls1.size() == 1) return true;

    lab = label(c, st);
    have_lab = true;
    const Collineation& g0 = lab.optimal.front();
    int target = -1;
    cls1.for_each([&](PointId p) { target = std::max<int>(target, apply(plane_, g0, p)); });
    for (const Collineation& g : lab.optimal)
      if (apply(plane_, g, added) == target) return true;
    return false;
  }

  std::vector<PointId> orbit_reps(const Labeling& lab, const PointSet& avail) const {
    if (lab.degenerate || lab.optimal.size() == 1) return avail.members();
    std::array<PointId, 256> parent;
    for (int i = 0; i < 256; ++i) parent[i] = static_cast<PointId>(i);
    auto find = [&](PointId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    const Field& f = plane_.field();
    const Collineation g0inv = inverse(f, lab.optimal.front());
    const std::vector<PointId> pts = avail.members();
    for (std::size_t i = 1; i < lab.optimal.size(); ++i) {
      const Collineation sigma = compose(f, g0inv, lab.optimal[i]);
      for (PointId p : pts) {
        PointId a = find(p), b = find(apply(plane_, sigma, p));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        parent[b] = a;
      }
    }
    std::vector<PointId> reps;
    for (PointId p : pts)
      if (find(p) == p) reps.push_back(p);
    return reps;
  }

  // Accepted children of the node in w.counter, each passed to `emit` with
  // the counter holding the child.
  template <typename Emit>
  void children(WorkerState& w, const Labeling& lab, const PointSet& avail, Emit&& emit) const {
    std::vector<PointSet> seen;
    for (PointId q : orbit_reps(lab, avail)) {
      w.counter.insert(q);
      ++w.stats.children_tested;
      Labeling child;
      bool have = false;
      if (accept(w.counter, q, child, have, w.stats)) {
        bool dup = false;
        if (lab.degenerate) {
          if (!have) {
            child = label(w.counter, w.stats);
            have = true;
          }
          dup = std::find(seen.begin(), seen.end(), child.canonical) != seen.end();
          if (!dup) seen.push_back(child.canonical);
        }
        if (!dup) emit(child, have);
      }
      w.counter.erase(q);
    }
  }

  void visit(WorkerState& w, Labeling& lab, bool have) const {
    ++w.stats.nodes;
    if (is_target(w.counter.size()) && w.counter.is_t_semiarc(t_)) w.found.push_back(w.counter.members());
    expand(w, &lab, have);
  }

  void expand(WorkerState& w, Labeling* lab, bool have) const {
    PointSet avail;
    if (!evaluate(w.counter, avail, w.stats)) return;
    Labeling local;
    if (!have) {
      local = label(w.counter, w.stats);
      lab = &local;
    }
    children(w, *lab, avail, [&](Labeling& child, bool child_have) { visit(w, child, child_have); });
  }

 private:
  const Plane& plane_;
  const SearchConfig& config_;
  int q_, n_, t_;
  bool pure_;
  int max_len_ = 0;
  bool union_rule_ = false;
  int max_target_ = 0;
  std::vector<char> is_target_;
  std::vector<TargetInfo> targets_;
};

std::vector<PointSet> next_level(const Engine& engine, const Plane& plane, const std::vector<PointSet>& level,
                                 SearchStats& stats) {
  WorkerState w(plane);
  std::vector<PointSet> out;
  for (const PointSet& a : level) {
    w.counter.assign(a);
    PointSet avail;
    if (!engine.evaluate(w.counter, avail, w.stats)) continue;
    const Labeling lab = engine.label(w.counter, w.stats);
    engine.children(w, lab, avail, [&](Labeling&, bool) { out.push_back(w.counter.members()); });
  }
  stats.children_tested += w.stats.children_tested;
  stats.labelings += w.stats.labelings;
  stats.pruned_long_secant += w.stats.pruned_long_secant;
  stats.pruned_structural += w.stats.pruned_structural;
  stats.pruned_distribution += w.stats.pruned_distribution;
  return out;
}

void add_stats(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.children_tested += from.children_tested;
  into.labelings += from.labelings;
  into.pruned_long_secant += from.pruned_long_secant;
  into.pruned_structural += from.pruned_structural;
  into.pruned_distribution += from.pruned_distribution;
}

std::vector<int> ids_of(const PointSet& s) {
  std::vector<int> out;
  s.for_each([&](PointId p) { out.push_back(p); });
  return out;
}

PointSet set_of(const std::vector<int>& ids) {
  PointSet s;
  for (int id : ids) s.insert(static_cast<PointId>(id));
  return s;
}

nlohmann::json run_signature(const Plane& plane, const SearchConfig& config, const std::vector<int>& targets, int h) {
  return {{"q", plane.q()},
          {"modulus", plane.field().spec().modulus},
          {"t", config.t},
          {"targets", targets},
          {"threshold", h},
          {"group", group_kind_name(config.group)},
          {"prune", {config.prune.distribution, config.prune.long_secant, config.prune.structural}}};
}

struct Checkpoint {
  std::filesystem::path dir;
  std::set<std::size_t> done;
  std::vector<PointSet> found;
  SearchStats stats;

  void load(std::size_t rep_count) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind("worker-", 0) != 0) continue;
      std::ifstream in(entry.path());
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
          continue;  // torn final line of an interrupted run
        }
        const std::size_t rep = j.at("rep").get<std::size_t>();
        if (rep >= rep_count || !done.insert(rep).second) continue;
        for (const auto& ids : j.at("found")) found.push_back(set_of(ids.get<std::vector<int>>()));
        stats.nodes += j.value("nodes", 0ULL);
        stats.children_tested += j.value("children", 0ULL);
        stats.labelings += j.value("labelings", 0ULL);
        stats.pruned_long_secant += j.value("pruned_long_secant", 0ULL);
        stats.pruned_structural += j.value("pruned_structural", 0ULL);
        stats.pruned_distribution += j.value("pruned_distribution", 0ULL);
      }
    }
  }
};

void run_workers(const Engine& engine, const Plane& plane, const SearchConfig& config,
                 const std::vector<PointSet>& reps, Checkpoint* ckpt, std::vector<PointSet>& found,
                 SearchStats& stats) {
  const int workers = std::max(1, config.workers);
  std::vector<WorkerState> states;
  states.reserve(workers);
  for (int w = 0; w < workers; ++w) states.emplace_back(plane);
  auto work = [&](int wid) {
    WorkerState& w = states[wid];
    std::ofstream log;
    if (ckpt) log.open(ckpt->dir / ("worker-" + std::to_string(wid) + ".jsonl"), std::ios::app);
    auto last_flush = Clock::now();
    for (std::size_t i = wid; i < reps.size(); i += workers) {
      if (ckpt && ckpt->done.count(i)) continue;
      const std::size_t found_before = w.found.size();
      const SearchStats before = w.stats;
      w.counter.assign(reps[i]);
      engine.expand(w, nullptr, false);
      if (log.is_open()) {
        nlohmann::json line = {{"rep", i},
                               {"nodes", w.stats.nodes - before.nodes},
                               {"children", w.stats.children_tested - before.children_tested},
                               {"labelings", w.stats.labelings - before.labelings},
                               {"pruned_long_secant", w.stats.pruned_long_secant - before.pruned_long_secant},
                               {"pruned_structural", w.stats.pruned_structural - before.pruned_structural},
                               {"pruned_distribution", w.stats.pruned_distribution - before.pruned_distribution}};
        line["found"] = nlohmann::json::array();
        for (std::size_t k = found_before; k < w.found.size(); ++k) line["found"].push_back(ids_of(w.found[k]));
        log << line.dump() << '\n';
        const auto now = Clock::now();
        if (std::chrono::duration<double>(now - last_flush).count() >= config.checkpoint_interval_s) {
          log.flush();
          last_flush = now;
        }
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  for (const WorkerState& w : states) {
    found.insert(found.end(), w.found.begin(), w.found.end());
    add_stats(stats, w.stats);
  }
}

std::vector<int> searched_sizes(const std::vector<SizeStatus>& plan) {
  std::vector<int> out;
  for (const SizeStatus& st : plan)
    if (st.outcome != SizeOutcome::kExcluded) out.push_back(st.size);
  return out;
}

void finish(const Plane& plane, const SearchConfig& config, std::vector<PointSet> found, ClassificationReport& rep) {
  std::unordered_set<PointSet, PointSetHash> seen;
  for (const PointSet& s : found) {
    ClassificationRecord r = make_record(plane, s, config.group);
    if (seen.insert(r.points).second) rep.records.push_back(std::move(r));
  }
  std::sort(rep.records.begin(), rep.records.end(),
            [](const ClassificationRecord& a, const ClassificationRecord& b) { return sorted_before(a.points, b.points); });
  std::set<int> present;
  for (const auto& r : rep.records) present.insert(r.size);
  for (SizeStatus& st : rep.sizes)
    if (st.outcome != SizeOutcome::kExcluded) st.outcome = present.count(st.size) ? SizeOutcome::kFound : SizeOutcome::kNone;
}

}  // namespace

std::vector<SizeStatus> plan_sizes(const Plane& plane, const SearchConfig& config) {
  const int q = plane.q();
  const int n = plane.size();
  const int t = config.t;
  if (t < 0 || t > q + 1) throw std::invalid_argument("t must lie in [0, q+1]");
  std::vector<int> candidates = config.size_targets;
  const bool t2 = t == 2;
  const SizeBounds b = size_bounds(q);
  if (candidates.empty()) {
    const int lo = t2 ? b.lower : 1, hi = t2 ? b.upper : n;
    for (int s = lo; s <= hi; ++s) candidates.push_back(s);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  const int max_len = std::max(1, effective_max_len(q, t, config.prune.long_secant));
  std::vector<SizeStatus> out;
  for (int s : candidates) {
    SizeStatus st;
    st.size = s;
    if (s < 1 || s > n) {
      st.outcome = SizeOutcome::kExcluded;
      st.reason = "outside [1, " + std::to_string(n) + "]";
    } else if (t2 && (s < b.lower || s > b.upper)) {
      st.outcome = SizeOutcome::kExcluded;
      st.reason = "outside size bounds [" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
    } else if (t2 && !size_feasibility(q, s).feasible) {
      st.outcome = SizeOutcome::kExcluded;
      st.reason = "divisibility: " + size_feasibility(q, s).reason;
    } else if (config.prune.distribution && enumerate_secant_distributions(q, s, t, max_len).empty()) {
      st.outcome = SizeOutcome::kExcluded;
      st.reason = "no secant distribution";
    }
    out.push_back(st);
  }
  return out;
}

ClassificationRecord make_record(const Plane& plane, const PointSet& s, GroupKind group) {
  ClassificationRecord r;
  r.points = canonical_form(plane, s, group);
  r.size = s.size();
  r.x = secant_distribution(plane, r.points);
  r.stab_pgl = stabilizer(plane, r.points, GroupKind::kPgl);
  r.stab_pgammal = plane.field().h() == 1 ? r.stab_pgl : stabilizer(plane, r.points, GroupKind::kPgammal);
  return r;
}

std::vector<std::vector<PointSet>> generate_admissible_tree(const Plane& plane, int t, int h, GroupKind group) {
  if (h < 1) throw std::invalid_argument("tree height must be at least 1");
  SearchConfig config;
  config.t = t;
  config.group = group;
  const Engine engine(plane, config, {}, true);
  SearchStats stats;
  std::vector<std::vector<PointSet>> levels;
  levels.push_back({PointSet{0}});
  while (static_cast<int>(levels.size()) < h) {
    auto next = next_level(engine, plane, levels.back(), stats);
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

ClassificationReport classify(const Plane& plane, const SearchConfig& config) {
  const auto start = Clock::now();
  ClassificationReport rep;
  rep.q = plane.q();
  rep.t = config.t;
  rep.group = config.group;
  rep.stats.workers = std::max(1, config.workers);
  rep.stats.isa = kernels::isa_name(kernels::active_isa());
  if (plane.q() >= 9 && config.size_targets.empty() && !config.long_run)
    throw InfeasibleConfig("a full classification for q >= 9 runs for days; pass --long-run or restrict --sizes");
  rep.sizes = plan_sizes(plane, config);
  const std::vector<int> targets = searched_sizes(rep.sizes);
  if (targets.empty()) throw InfeasibleConfig("no target size survives the bound and feasibility filters");
  const int min_target = targets.front();
  if (config.threshold_h < 0 || config.threshold_h > min_target)
    throw InfeasibleConfig("threshold must lie in [1, " + std::to_string(min_target) + "]");

  const Engine engine(plane, config, targets, false);
  std::vector<PointSet> found;
  // Level 1: all points are equivalent.
  std::vector<std::vector<PointSet>> levels{{PointSet{0}}};

  if (!config.augmentation) {
    // Every level deduplicated by canonical form.
    WorkerState w(plane);
    for (int k = 1; k < engine.max_target(); ++k) {
      std::unordered_set<PointSet, PointSetHash> seen;
      std::vector<PointSet> next;
      for (const PointSet& a : levels.back()) {
        w.counter.assign(a);
        PointSet avail;
        if (!engine.evaluate(w.counter, avail, w.stats)) continue;
        avail.for_each([&](PointId p) {
          ++w.stats.children_tested;
          PointSet child = a;
          child.insert(p);
          ++w.stats.labelings;
          PointSet canon = canonical_form(plane, child, config.group);
          if (seen.insert(canon).second) next.push_back(canon);
        });
      }
      std::sort(next.begin(), next.end(), sorted_before);
      if (next.empty()) break;
      levels.push_back(std::move(next));
    }
    add_stats(rep.stats, w.stats);
    rep.stats.threshold = static_cast<int>(levels.size());
  } else {
    const int h_cap = config.threshold_h > 0 ? config.threshold_h : min_target;
    while (static_cast<int>(levels.size()) < h_cap) {
      auto next = next_level(engine, plane, levels.back(), rep.stats);
      if (next.empty()) break;
      if (config.threshold_h == 0 && next.size() > config.tree_budget) break;
      levels.push_back(std::move(next));
    }
    rep.stats.threshold = static_cast<int>(levels.size());
  }

  for (const auto& level : levels) {
    rep.stats.tree_level_counts.push_back(level.size());
    IncidenceCounter c(plane);
    for (const PointSet& a : level) {
      if (!engine.is_target(a.size())) continue;
      c.assign(a);
      if (c.is_t_semiarc(config.t)) found.push_back(a);
    }
  }

  if (config.augmentation && static_cast<int>(levels.size()) < engine.max_target()) {
    const std::vector<PointSet>& reps = levels.back();
    std::unique_ptr<Checkpoint> ckpt;
    if (!config.checkpoint_dir.empty()) {
      ckpt = std::make_unique<Checkpoint>();
      ckpt->dir = config.checkpoint_dir;
      std::filesystem::create_directories(ckpt->dir);
      const auto sig = run_signature(plane, config, targets, rep.stats.threshold);
      const auto tree_path = ckpt->dir / "tree.json";
      bool resume = false;
      if (std::filesystem::exists(tree_path)) {
        std::ifstream in(tree_path);
        const auto saved = nlohmann::json::parse(in);
        resume = saved.at("signature") == sig && saved.at("reps").size() == reps.size();
        if (!resume) throw std::runtime_error("checkpoint " + tree_path.string() + " belongs to a different run");
      } else {
        nlohmann::json tree = {{"signature", sig}, {"reps", nlohmann::json::array()}};
        for (const PointSet& a : reps) tree["reps"].push_back(ids_of(a));
        std::ofstream out(tree_path);
        if (!out) throw std::runtime_error("cannot write " + tree_path.string());
        out << tree.dump() << '\n';
      }
      if (resume) {
        ckpt->load(reps.size());
        rep.stats.resumed_reps = ckpt->done.size();
        found.insert(found.end(), ckpt->found.begin(), ckpt->found.end());
        add_stats(rep.stats, ckpt->stats);
      }
    }
    run_workers(engine, plane, config, reps, ckpt.get(), found, rep.stats);
  }

  finish(plane, config, std::move(found), rep);
  rep.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

}  // namespace semiarc
