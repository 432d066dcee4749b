#include <filesystem>

#include "doctest.h"
#include "testkit/properties.hpp"
#include "semiarc/constraints.hpp"
#include "semiarc/report.hpp"
#include "semiarc/search.hpp"

using namespace semiarc;

TEST_SUITE("search") {

TEST_CASE("admissible tree") {
  const Plane plane = Plane::of_order(4);
  const auto levels = generate_admissible_tree(plane, 2, 4, GroupKind::kPgl);
  REQUIRE(levels.size() == 4);
  CHECK(levels[0].size() == 1);
  CHECK(levels[1].size() == 1);
  for (const auto& level : levels)
    for (const PointSet& s : level) CHECK(is_admissible(plane, s, 2));
  bool frame = false;
  for (const PointSet& s : levels[3]) frame = frame || secant_distribution(plane, s)[3] == 0;
  CHECK(frame);
}

TEST_CASE("classification counts for small planes") {
  struct Want {
    int q;
    std::map<int, int> counts;
  };
  for (const Want& w : {Want{4, {{4, 1}, {6, 1}, {7, 1}}},
                        Want{5, {{5, 1}, {6, 1}, {9, 1}}},
                        Want{7, {{7, 1}, {9, 6}, {10, 12}, {11, 3}, {12, 3}}}}) {
    CAPTURE(w.q);
    const Plane plane = Plane::of_order(w.q);
    const auto report = classify(plane, SearchConfig{});
    CHECK(report.counts() == w.counts);
  }
}

TEST_CASE("classify agrees with brute force") {
  for (int q : {2, 3, 4}) {
    for (int t : {2, q - 1, q, q + 1}) {
      if (t < 1) continue;
      CAPTURE(q);
      CAPTURE(t);
      const auto o = testkit::oracle_equivalence(q, t, GroupKind::kPgl);
      CHECK_MESSAGE(o.ok(), o.summary());
    }
  }
  const auto o4 = testkit::oracle_equivalence(4, 2, GroupKind::kPgammal);
  CHECK_MESSAGE(o4.ok(), o4.summary());
  const auto o5 = testkit::oracle_equivalence(5, 2, GroupKind::kPgl);
  CHECK_MESSAGE(o5.ok(), o5.summary());
}

TEST_CASE("prunes and augmentation do not change the result") {
  for (auto [q, t] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 2}, std::pair{5, 3}}) {
    CAPTURE(q);
    CAPTURE(t);
    const auto o = testkit::prune_soundness(q, t);
    CHECK_MESSAGE(o.ok(), o.summary());
  }
}

TEST_CASE("reports do not depend on the worker count") {
  const auto o = testkit::worker_determinism(7, 3, 1, 8);
  CHECK_MESSAGE(o.ok(), o.summary());
  const auto o8 = testkit::worker_determinism(8, 4, 1, 3);
  CHECK_MESSAGE(o8.ok(), o8.summary());
}

TEST_CASE("size-q semiarcs are arcs") {
  for (int q : {5, 7, 9, 11}) {
    CAPTURE(q);
    const Plane plane = Plane::of_order(q);
    SearchConfig config;
    config.size_targets = {q};
    const auto report = classify(plane, config);
    REQUIRE(report.records.size() == 1);
    const auto& x = report.records[0].x;
    for (std::size_t i = 3; i < x.size(); ++i) CHECK(x[i] == 0);
  }
}

TEST_CASE("size planning") {
  const Plane plane = Plane::of_order(7);
  const auto sizes = plan_sizes(plane, SearchConfig{});
  int excluded = 0;
  for (const auto& s : sizes)
    if (s.outcome == SizeOutcome::kExcluded) {
      ++excluded;
      CHECK_FALSE(s.reason.empty());
    }
  CHECK(excluded >= 1);  // size 8 fails q+1 divisibility
  const auto report = classify(plane, SearchConfig{});
  for (int s : {8, 13, 14, 15}) {
    bool empty = false;
    for (const auto& st : report.sizes)
      if (st.size == s) empty = st.outcome != SizeOutcome::kFound;
    CHECK_MESSAGE(empty, "size " << s);
  }
}

TEST_CASE("infeasible configurations") {
  const Plane p9 = Plane::of_order(9);
  CHECK_THROWS_AS(classify(p9, SearchConfig{}), InfeasibleConfig);
  const Plane p5 = Plane::of_order(5);
  SearchConfig config;
  config.size_targets = {7};
  CHECK_THROWS_AS(classify(p5, config), InfeasibleConfig);
  config.size_targets = {9};
  config.threshold_h = 12;
  CHECK_THROWS_AS(classify(p5, config), InfeasibleConfig);
}

TEST_CASE("restricted sizes match the full run") {
  const Plane plane = Plane::of_order(8);
  SearchConfig config;
  config.group = GroupKind::kPgammal;
  config.size_targets = {8, 16};
  CHECK(classify(plane, config).counts() == std::map<int, int>{{8, 2}, {16, 2}});
}

TEST_CASE("checkpoint and resume") {
  const auto dir = std::filesystem::temp_directory_path() / "semiarc-ckpt-test";
  std::filesystem::remove_all(dir);
  const Plane plane = Plane::of_order(7);
  SearchConfig config;
  config.threshold_h = 3;
  config.checkpoint_dir = dir.string();
  config.checkpoint_interval_s = 0.0;
  const auto first = classify(plane, config);
  const auto second = classify(plane, config);
  CHECK(second.stats.resumed_reps == first.stats.tree_level_counts.back());
  CHECK(emit_report(plane, first, ReportFormat::kJson) == emit_report(plane, second, ReportFormat::kJson));
  config.threshold_h = 4;
  CHECK_THROWS(classify(plane, config));
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
