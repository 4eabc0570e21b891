#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "a2shift/error.hpp"
#include "a2shift/plane.hpp"

using namespace a2;

namespace {

std::vector<std::vector<PointId>> lines_of(const IncidencePlane& p) {
  std::vector<std::vector<PointId>> out;
  for (LineId l = 0; l < p.num_lines(); ++l) out.push_back(p.line_points(l));
  return out;
}

}  // namespace

TEST_SUITE("plane") {
  TEST_CASE("PG(2,q) satisfies the axioms for every supported order") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
      CAPTURE(q);
      const IncidencePlane p = pg2(q);
      CHECK(p.num_points() == q * q + q + 1);
      CHECK(p.num_lines() == q * q + q + 1);
      const VerificationReport r = verify_plane(p);
      CHECK(r.passed());
      CHECK(r.stats["line_size"] == "pass");
    }
  }

  TEST_CASE("PG(2,2) first line is the line through the first two points") {
    const IncidencePlane p = pg2(2);
    // Points in order: (0,0,1) (0,1,0) (0,1,1) (1,0,0) ...; the line x = 0
    // holds the first three.
    const LineId l = p.join(0, 1);
    CHECK(p.line_points(l) == std::vector<PointId>{0, 1, 2});
  }

  TEST_CASE("order-3 table") {
    const IncidencePlane p = classic_plane_order3();
    CHECK(verify_plane(p).passed());
    CHECK(p.line_names()[8] == "(8)");
    CHECK(p.line_points(8) == std::vector<PointId>{1, 5, 6, 8});
    // Independent rebuild from the difference set {1, 2, 4, 10} mod 13.
    for (int j = 0; j < 13; ++j) {
      const int s = 12 - j;
      std::vector<PointId> want{(s + 1) % 13, (s + 2) % 13, (s + 4) % 13, (s + 10) % 13};
      std::sort(want.begin(), want.end());
      CHECK(p.line_points(j) == want);
    }
  }

  TEST_CASE("PG(2,3) and the table are isomorphic") {
    const auto iso = planes_isomorphic(pg2(3), classic_plane_order3());
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(pg2(3), classic_plane_order3(), *iso));
  }

  TEST_CASE("relabelled planes are recognised") {
    const IncidencePlane p = pg2(4);
    std::vector<PointId> perm(static_cast<std::size_t>(p.num_points()));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(7);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto lines = lines_of(p);
    for (auto& l : lines)
      for (auto& x : l) x = perm[x];
    std::reverse(lines.begin(), lines.end());
    const IncidencePlane shuffled(4, p.num_points(), lines);
    const auto iso = planes_isomorphic(p, shuffled);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(p, shuffled, *iso));
  }

  TEST_CASE("planes of different orders are not isomorphic") {
    CHECK_FALSE(planes_isomorphic(pg2(2), pg2(3)).has_value());
  }

  TEST_CASE("a broken plane fails verification") {
    auto lines = lines_of(pg2(2));
    lines[0] = lines[1];
    const IncidencePlane bad(2, 7, lines);
    const VerificationReport r = verify_plane(bad);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.counterexamples.empty());
  }

  TEST_CASE("joins and meets") {
    const IncidencePlane p = pg2(3);
    for (PointId a = 0; a < p.num_points(); ++a)
      for (PointId b = a + 1; b < p.num_points(); ++b) {
        const LineId l = p.join(a, b);
        REQUIRE(l >= 0);
        CHECK(p.incident(a, l));
        CHECK(p.incident(b, l));
      }
    CHECK(p.join(0, 0) >= 0);
    CHECK(p.meet(0, 1) >= 0);
  }

  TEST_CASE("dual plane") {
    const IncidencePlane p = pg2(3);
    const IncidencePlane d = dual_plane(p);
    CHECK(verify_plane(d).passed());
    CHECK(d.incident(0, 5) == p.incident(5, 0));
    CHECK(planes_isomorphic(p, d).has_value());
  }

  TEST_CASE("out-of-range point ids are rejected") {
    CHECK_THROWS_AS(IncidencePlane(2, 3, {{0, 1, 5}}), Error);
  }
}
