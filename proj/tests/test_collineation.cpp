#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "testkit/properties.hpp"
#include "semiarc/collineation.hpp"
#include "semiarc/explicit_group.hpp"
#include "semiarc/report.hpp"
#include "semiarc/search.hpp"
#include "semiarc/semiarc.hpp"

using namespace semiarc;

namespace {

PointSet pts(const Plane& plane, const char* list) { return parse_pointset(plane, split_point_list(list)); }

}  // namespace

TEST_SUITE("collineation") {

TEST_CASE("group orders") {
  CHECK(group_order(4, GroupKind::kPgl) == 60480);
  CHECK(group_order(4, GroupKind::kPgammal) == 120960);
  CHECK(group_order(5, GroupKind::kPgl) == 372000);
  CHECK(group_order(9, GroupKind::kPgammal) == 2 * group_order(9, GroupKind::kPgl));
  CHECK(group_order(7, GroupKind::kPgammal) == group_order(7, GroupKind::kPgl));
  for (int q : {2, 3}) {
    const oracle::PolyField f = oracle::PolyField::of_order(q);
    CHECK(oracle::enumerate_group(f, false).size() == oracle::pgl_order(q));
    CHECK(group_order(q, GroupKind::kPgl) == oracle::pgl_order(q));
  }
  CHECK(ExplicitGroup(Plane::of_order(2), GroupKind::kPgl).size() == 168);
}

TEST_CASE("apply") {
  const Plane plane = Plane::of_order(5);
  // (x, y, z) -> (y, z, x)
  const Collineation cyc = make_collineation(plane.field(), {0, 1, 0, 0, 0, 1, 1, 0, 0});
  CHECK(apply(plane, cyc, plane.point_id({1, 2, 3})) == plane.point_id({2, 3, 1}));
  CHECK(element_order(plane, cyc) == 3);
  const Collineation scaled = make_collineation(plane.field(), {2, 0, 0, 0, 2, 0, 0, 0, 2});
  CHECK(scaled == Collineation{});

  const Plane p9 = Plane::of_order(9);
  const Collineation frob = make_collineation(p9.field(), {1, 0, 0, 0, 1, 0, 0, 0, 1}, 1);
  CHECK(apply(p9, frob, parse_point(p9, "1:w:w^5")) == parse_point(p9, "1:w^3:w^7"));
  CHECK(element_order(p9, frob) == 2);
}

TEST_CASE("incidence, composition and inverses") {
  std::mt19937_64 rng(11);
  for (int q : {4, 7, 8, 9}) {
    const Plane plane = Plane::of_order(q);
    const Field& f = plane.field();
    for (int trial = 0; trial < 30; ++trial) {
      const Collineation a = random_collineation(plane, GroupKind::kPgammal, rng);
      const Collineation b = random_collineation(plane, GroupKind::kPgammal, rng);
      const Collineation ab = compose(f, a, b), ai = inverse(f, a);
      for (int p = 0; p < plane.size(); ++p) {
        const auto id = static_cast<PointId>(p);
        REQUIRE(apply(plane, ab, id) == apply(plane, a, apply(plane, b, id)));
        REQUIRE(apply(plane, ai, apply(plane, a, id)) == id);
      }
      for (int l = 0; l < plane.size(); ++l) {
        const auto line = static_cast<LineId>(l);
        const LineId image = apply_to_line(plane, a, line);
        for (PointId p : plane.points_on(line)) REQUIRE(plane.incident(apply(plane, a, p), image));
      }
    }
  }
}

TEST_CASE("frame maps") {
  const Plane plane = Plane::of_order(7);
  auto id = [&](Elem a, Elem b, Elem c) { return plane.point_id({a, b, c}); };
  const auto g = frame_map(plane, id(1, 2, 3), id(0, 1, 5), id(1, 1, 1), id(2, 0, 1));
  REQUIRE(g);
  CHECK(apply(plane, *g, id(1, 2, 3)) == id(1, 0, 0));
  CHECK(apply(plane, *g, id(0, 1, 5)) == id(0, 1, 0));
  CHECK(apply(plane, *g, id(1, 1, 1)) == id(0, 0, 1));
  CHECK(apply(plane, *g, id(2, 0, 1)) == id(1, 1, 1));
  CHECK_FALSE(frame_map(plane, id(1, 0, 0), id(0, 1, 0), id(1, 1, 0), id(0, 0, 1)));
}

TEST_CASE("stabilizers of known sets") {
  const Plane p5 = Plane::of_order(5);
  // Five points of the conic xz = y^2.
  const PointSet conic5 = pts(p5, "0:0:1 1:0:0 1:1:1 1:2:4 1:3:4");
  CHECK(stabilizer(p5, conic5, GroupKind::kPgl).order == 20);
  const auto whole = stabilizer(p5, p5.all_points(), GroupKind::kPgl);
  CHECK(whole.order == 372000);

  const Plane p7 = Plane::of_order(7);
  const PointSet conic7 = pts(p7, "0:0:1 1:0:0 1:1:1 1:2:4 1:3:2 1:4:2 1:5:4");
  const auto r7 = stabilizer(p7, conic7, GroupKind::kPgl);
  CHECK(r7.order == 42);
  CHECK(stabilizer_elements(p7, conic7, GroupKind::kPgl).size() == 42);

  const Plane p4 = Plane::of_order(4);
  CHECK(stabilizer(p4, pts(p4, "0:0:1 0:1:0 1:0:0 1:1:1"), GroupKind::kPgammal).order == 48);
  CHECK(stabilizer(p4, pts(p4, "0:0:1 0:1:0 1:0:0 1:1:1"), GroupKind::kPgl).order == 24);
}

TEST_CASE("the two large-stabilizer 8-sets of PG(2,8)") {
  const Plane plane = Plane::of_order(8);
  const PointSet a = pts(plane, "1:0:0 0:1:0 0:0:1 1:1:1 1:w:w^5 1:w^2:w 1:w^3:w^4 1:w^5:w^3");
  const PointSet b = pts(plane, "1:0:0 0:1:0 0:0:1 1:1:1 1:w:w^5 1:w^3:w^6 1:w^5:w^4 1:w^6:w");
  for (const PointSet* s : {&a, &b}) {
    CHECK(is_t_semiarc(plane, *s, 2));
    CHECK(secant_distribution(plane, *s) == SecantDistribution{29, 16, 28, 0, 0, 0, 0, 0, 0, 0});
  }
  const auto sa = stabilizer(plane, a, GroupKind::kPgammal);
  const auto sb = stabilizer(plane, b, GroupKind::kPgammal);
  CHECK(sa.order == 42);
  CHECK(sb.order == 168);
  CHECK(sa.name == std::optional<std::string>("(Z7 ⋊ Z3) ⋊ Z2"));
  CHECK(sb.name == std::optional<std::string>("Z2^3 ⋊ (Z7 ⋊ Z3)"));
  CHECK_FALSE(are_equivalent(plane, a, b, GroupKind::kPgammal));
}

TEST_CASE("canonical forms separate the known classes") {
  for (auto [q, classes] : {std::pair{4, 3}, std::pair{7, 25}}) {
    const Plane plane = Plane::of_order(q);
    SearchConfig config;
    config.group = GroupKind::kPgammal;
    const ClassificationReport report = classify(plane, config);
    REQUIRE(report.records.size() == static_cast<std::size_t>(classes));
    std::set<std::vector<PointId>> forms;
    for (const auto& r : report.records) {
      CHECK(canonical_form(plane, r.points, GroupKind::kPgammal) == r.points);
      forms.insert(r.points.members());
    }
    CHECK(forms.size() == static_cast<std::size_t>(classes));
  }
}

TEST_CASE("orbit-stabilizer identity") {
  for (int q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const auto o = testkit::orbit_stabilizer(q, GroupKind::kPgl, q <= 3 ? 20 : 6, 100 + q);
    CHECK_MESSAGE(o.ok(), o.summary());
  }
  const auto o4 = testkit::orbit_stabilizer(4, GroupKind::kPgammal, 6, 7);
  CHECK_MESSAGE(o4.ok(), o4.summary());
}

TEST_CASE("canonical form is constant on orbits") {
  for (int q : testkit::kOrders) {
    CAPTURE(q);
    for (GroupKind kind : {GroupKind::kPgl, GroupKind::kPgammal}) {
      const auto o = testkit::orbit_constancy(q, kind, 4, 100, 31 * q);
      CHECK_MESSAGE(o.ok(), o.summary());
    }
  }
}

TEST_CASE("stabilizer orders divide the group order") {
  std::mt19937_64 rng(5);
  for (int q : {5, 7, 9}) {
    const Plane plane = Plane::of_order(q);
    for (const PointSet& s : testkit::sample_sets(plane, 15, 12, q)) {
      for (GroupKind kind : {GroupKind::kPgl, GroupKind::kPgammal}) {
        const auto r = stabilizer(plane, s, kind);
        REQUIRE(r.order > 0);
        CHECK(group_order(q, kind) % r.order == 0);
      }
    }
  }
}

TEST_CASE("group names") {
  CHECK(recognize_group(1, {{1, 1}}) == std::optional<std::string>("Z1"));
  CHECK(recognize_group(24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}) == std::optional<std::string>("S4"));
  CHECK_FALSE(recognize_group(24, {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 16}}).has_value());
  CHECK(std::string(group_kind_name(GroupKind::kPgammal)) == "pgammal");
  CHECK(parse_group_kind("pgl") == GroupKind::kPgl);
  CHECK_THROWS_AS(parse_group_kind("psl"), std::invalid_argument);
}

TEST_CASE("errors") {
  const Field f = Field::of_order(4);
  CHECK_THROWS_AS(make_collineation(f, {1, 0, 0, 0, 1, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_collineation(f, {1, 0, 0, 0, 1, 0, 0, 0, 1}, 2), std::invalid_argument);
}

}  // TEST_SUITE
