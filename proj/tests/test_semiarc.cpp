#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "testkit/properties.hpp"
#include "semiarc/report.hpp"
#include "semiarc/semiarc.hpp"

using namespace semiarc;

namespace {

PointSet pts(const Plane& plane, const char* list) { return parse_pointset(plane, split_point_list(list)); }

std::vector<oracle::Triple> triples(const Plane& plane, const PointSet& s) {
  std::vector<oracle::Triple> out;
  s.for_each([&](PointId p) {
    const Coords& c = plane.point(p);
    out.push_back({c[0], c[1], c[2]});
  });
  return out;
}

}  // namespace

TEST_SUITE("semiarc") {

TEST_CASE("projective triangle in PG(2,5)") {
  const Plane plane = Plane::of_order(5);
  const PointSet s = pts(plane, "1:0:0 0:1:0 0:0:1 1:1:0 4:1:0 1:0:1 4:0:1 0:1:1 0:4:1");
  CHECK(s.size() == 9);
  CHECK(is_t_semiarc(plane, s, 2));
  CHECK(is_admissible(plane, s, 2));
  CHECK(secant_distribution(plane, s) == SecantDistribution{0, 18, 6, 4, 3, 0, 0});
  CHECK(distribution_identities_hold(5, 9, secant_distribution(plane, s)));
  CHECK(design_check(plane, s, 2));
  CHECK(tangent_count(plane, s, plane.point_id({1, 0, 0})) == 2);
}

TEST_CASE("a line plus an external point in PG(2,4)") {
  const Plane plane = Plane::of_order(4);
  const oracle::PolyField f = oracle::PolyField::of_order(4);
  const PointSet s = plane.line_points(plane.line_id({0, 0, 1})) | pts(plane, "0:0:1");
  CHECK(s.size() == 6);
  const auto tri = triples(plane, s);
  s.for_each([&](PointId p) {
    const Coords& c = plane.point(p);
    CHECK(tangent_count(plane, s, p) == oracle::tangent_count(f, tri, {c[0], c[1], c[2]}));
  });
  // The external point has no tangent, the line points have q-1 = 3.
  CHECK(tangent_count(plane, s, plane.point_id({0, 0, 1})) == 0);
  CHECK(tangent_count(plane, s, plane.point_id({1, 0, 0})) == 3);
  CHECK_FALSE(is_t_semiarc(plane, s, 3));
  CHECK(is_t_semiarc(plane, s - pts(plane, "0:0:1"), 4));
}

TEST_CASE("the Fano subplane of PG(2,4)") {
  const Plane plane = Plane::of_order(4);
  const PointSet fano = pts(plane, "1:0:0 0:1:0 0:0:1 1:1:0 1:0:1 0:1:1 1:1:1");
  CHECK(is_t_semiarc(plane, fano, 2));
  CHECK(secant_distribution(plane, fano) == SecantDistribution{0, 14, 0, 7, 0, 0});
  CHECK(design_check(plane, fano, 2));
}

TEST_CASE("distributions match the oracle") {
  for (int q : {3, 4, 7, 8}) {
    const Plane plane = Plane::of_order(q);
    const oracle::PolyField f = oracle::PolyField::of_order(q);
    for (const PointSet& s : testkit::sample_sets(plane, 30, 2 * q, 3 * q)) {
      const auto x = secant_distribution(plane, s);
      const auto want = oracle::secant_distribution(f, triples(plane, s));
      CHECK(std::vector<int>(x.begin(), x.end()) == std::vector<int>(want.begin(), want.end()));
      CHECK(distribution_identities_hold(q, s.size(), x));
    }
  }
  CHECK_FALSE(distribution_identities_hold(4, 4, {7, 8, 6, 1, 0, 0}));
}

TEST_CASE("the incremental counter matches a recount") {
  std::mt19937_64 rng(3);
  for (int q : {5, 8, 13}) {
    const Plane plane = Plane::of_order(q);
    IncidenceCounter counter(plane);
    PointSet s;
    std::uniform_int_distribution<int> pick(0, plane.size() - 1);
    for (int step = 0; step < 400; ++step) {
      const auto p = static_cast<PointId>(pick(rng));
      if (s.contains(p)) {
        counter.erase(p);
        s.erase(p);
      } else {
        counter.insert(p);
        s.insert(p);
      }
      REQUIRE(counter.size() == s.size());
      if (step % 20 != 0) continue;
      int longest = 0;
      for (int l = 0; l < plane.size(); ++l) {
        const int n = plane.line_points(static_cast<LineId>(l)).intersection_size(s);
        REQUIRE(counter.line_count(static_cast<LineId>(l)) == n);
        longest = std::max(longest, n);
      }
      CHECK(counter.max_line_count() == longest);
      s.for_each([&](PointId m) { REQUIRE(counter.tangents(m) == tangent_count(plane, s, m)); });
      if (!s.empty()) {
        for (int t = 0; t <= q + 1; ++t) CHECK(counter.is_t_semiarc(t) == is_t_semiarc(plane, s, t));
      }
    }
    counter.assign(s);
    CHECK(counter.members() == s);
    counter.clear();
    CHECK(counter.size() == 0);
  }
}

TEST_CASE("semiarcs are admissible at every subset") {
  const Plane plane = Plane::of_order(5);
  const PointSet s = pts(plane, "1:0:0 0:1:0 0:0:1 1:1:0 4:1:0 1:0:1 4:0:1 0:1:1 0:4:1");
  const auto members = s.members();
  for (std::uint32_t mask = 1; mask < (1U << members.size()); ++mask) {
    PointSet sub;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (mask >> i & 1U) sub.insert(members[i]);
    REQUIRE(is_admissible(plane, sub, 2));
  }
  CHECK(is_admissible(plane, plane.line_points(0), 2));
  CHECK_FALSE(is_admissible(plane, plane.all_points(), 2));
}

TEST_CASE("errors") {
  const Plane plane = Plane::of_order(3);
  const PointSet s{0, 1};
  CHECK_THROWS_AS(tangent_count(plane, s, 5), std::invalid_argument);
  CHECK_THROWS_AS(is_t_semiarc(plane, PointSet{}, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_admissible(plane, PointSet{}, 2), std::invalid_argument);
  CHECK_THROWS_AS(design_check(plane, plane.line_points(0), 2), std::invalid_argument);
}

}  // TEST_SUITE
