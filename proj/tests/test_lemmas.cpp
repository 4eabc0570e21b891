#include "doctest.h"

#include <bit>

#include "a2shift/error.hpp"
#include "a2shift/lemmas.hpp"

using namespace a2;

namespace {

std::vector<std::string> names(const TrianglePresentation& p, const std::vector<PointId>& ids) {
  std::vector<std::string> out;
  for (PointId x : ids) out.push_back(p.name(x));
  return out;
}

PointId point(const TrianglePresentation& p, const std::string& name) {
  for (PointId x = 0; x < p.num_points(); ++x)
    if (p.name(x) == name) return x;
  FAIL("unknown point " << name);
  return -1;
}

}  // namespace

TEST_SUITE("lemmas") {
  TEST_CASE("D and S_d for (x0,x2,x3)") {
    const TrianglePresentation c1 = builtin_c1();
    const Tile I{0, 2, 3};
    CHECK(names(c1, compute_D(c1, I)) == std::vector<std::string>{"x1", "x5"});
    CHECK(names(c1, compute_Sd(c1, I, point(c1, "x1"))) == std::vector<std::string>{"x4", "x5"});
    CHECK(names(c1, compute_Sd(c1, I, point(c1, "x5"))) == std::vector<std::string>{"x1", "x3"});
    try {
      compute_Sd(c1, I, point(c1, "x0"));
      FAIL("expected DNotReachable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DNotReachable);
    }
  }

  TEST_CASE("D never contains the base label") {
    const TrianglePresentation c1 = builtin_c1();
    for (const Tile& I : c1.tiles()) {
      const auto D = compute_D(c1, I);
      CHECK(D.size() == 2);
      CHECK(std::find(D.begin(), D.end(), I.x) == D.end());
    }
  }

  TEST_CASE("counting, technical and bound checks on C.1") {
    const TrianglePresentation c1 = builtin_c1();
    CHECK(check_counting(c1).passed());
    const VerificationReport t = check_technical(c1);
    CHECK(t.passed());
    CHECK(t.examined == 21);
    const VerificationReport s = check_S_bound(c1);
    CHECK(s.passed());
    CHECK(s.stats["bound"] == 3);
  }

  TEST_CASE("reachability profiles") {
    const TrianglePresentation c1 = builtin_c1();
    const BoolMatrix wall = build_wall(c1);
    for (const Tile& t : c1.tiles()) {
      const auto left = reach_profile(c1, wall, t, Side::Left);
      CHECK(left.per_base == std::vector<std::size_t>(7, 3));
      CHECK(left.constant_in_base());
      CHECK(left.per_distance.size() == 8);
      // The right profile is the left profile of the transposed digraph.
      const auto right = reach_profile(c1, wall, t, Side::Right);
      const auto mirrored = reach_profile(c1, wall.transpose(), t, Side::Left);
      CHECK(right.reachable == mirrored.reachable);
    }
    const VerificationReport r = check_lemma_red(c1);
    CHECK(r.passed());
    CHECK(r.examined == 42);
  }

  TEST_CASE("threshold meets") {
    const TrianglePresentation c1 = builtin_c1();
    const Tile I{0, 2, 3}, F{3, 4, 6};
    CHECK(check_threshold_meet(c1, I, I).meet == I);
    const MeetResult m = check_threshold_meet(c1, I, F);
    CHECK(m.threshold_base >= 0);
    CHECK(check_all_meets(c1).passed());
  }

  TEST_CASE("punctured lines, q = 2 exhaustive") {
    const VerificationReport r = punctured_lemma_verify(builtin_c1().plane(), {});
    CHECK(r.passed());
    CHECK(r.examined == 945);
    CHECK(r.stats["counterexamples"] == 0);
    CHECK(r.stats["min_best_coverage"].get<int>() >= 2);
    CHECK_FALSE(r.seed.has_value());
  }

  TEST_CASE("family counts") {
    CHECK(punctured_family_count(2) == 945);
    CHECK(punctured_family_count(3) == 7028736);
  }

  TEST_CASE("Fano instance from the reconstructed plane") {
    const TrianglePresentation c1 = builtin_c1();
    const IncidencePlane& fano = c1.plane();
    auto mask = [&](PointId line, PointId hole) {
      std::uint32_t m = 0;
      for (PointId x : fano.line_points(line))
        if (x != hole) m |= 1u << x;
      return m;
    };
    const PointId x0 = point(c1, "x0"), x1 = point(c1, "x1"), x2 = point(c1, "x2"), x3 = point(c1, "x3");
    // l1 = lambda(x0) = {x0,x2,x6} minus x2, l2 = lambda(x1) = {x2,x3,x5} minus x2.
    const std::uint32_t u = mask(x0, x2) | mask(x1, x2);
    std::uint32_t m = 0;
    for (PointId x : fano.line_points(x3)) m |= 1u << x;  // {x0,x4,x5}
    CHECK(std::popcount(m & u) == 2);
    CHECK(2 * std::popcount(m & u) > 3);
  }

  TEST_CASE("exhaustive mode is refused beyond q = 3") {
    PuncturedOptions o;
    try {
      punctured_lemma_verify(pg2(4), o);
      FAIL("expected InfeasibleExhaustive");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfeasibleExhaustive);
    }
  }

  TEST_CASE("sampling is seeded and independent of the job count") {
    PuncturedOptions o;
    o.mode = SweepMode::Sample;
    o.samples = 40000;
    o.seed = 7;
    o.jobs = 1;
    const VerificationReport a = punctured_lemma_verify(pg2(4), o);
    o.jobs = 3;
    const VerificationReport b = punctured_lemma_verify(pg2(4), o);
    CHECK(a == b);
    CHECK(a.passed());
    CHECK(a.examined == 40000);
    CHECK(a.seed == std::optional<std::uint64_t>{7});
    o.seed = 8;
    CHECK_FALSE(punctured_lemma_verify(pg2(4), o) == a);
  }

  TEST_CASE("exhaustive sweep is independent of the job count") {
    PuncturedOptions o;
    o.jobs = 1;
    const VerificationReport a = punctured_lemma_verify(pg2(2), o);
    o.jobs = 4;
    CHECK(punctured_lemma_verify(pg2(2), o) == a);
  }

  TEST_CASE("inequality chain") {
    const VerificationReport r = inequality_checks(100, {2, 3});
    CHECK(r.passed());
    CHECK(r.stats["q4_chain_bound"] == 23);
    CHECK(r.stats["q4_points"] == 21);
    CHECK(r.stats["value_at_q5"] == 20);
    CHECK(r.stats["scaled_excess"] == Json::array({-10, 1, -4, 1}));
    CHECK(r.stats["scaled_excess_at_q_plus_5"] == Json::array({20, 36, 11, 1}));
    CHECK(r.stats["three_line_unions"]["2"]["configurations"] == 945);
    CHECK(r.stats["three_line_unions"]["3"]["configurations"] == 18304);
    CHECK(r.stats["three_line_unions"]["3"]["min_union"] == 6);
    CHECK_THROWS_AS(inequality_checks(4), Error);
  }

  TEST_CASE("chain values by direct evaluation") {
    // (3q-3) + ((q^2+q)/2 - 3) * ceil((q-1)/2) against q^2+q+1.
    for (long q = 4; q <= 100; ++q) {
      const long lhs = (3 * q - 3) + ((q * q + q) / 2 - 3) * (q / 2);
      CHECK(lhs > q * q + q + 1);
      if (q >= 5) {
        const long r = q - 5;
        CHECK(q * q * q - 4 * q * q + q - 10 == r * r * r + 11 * r * r + 36 * r + 20);
      }
    }
  }

  TEST_CASE("battery on C.1") {
    const ReportBundle b = run_lemma_battery(builtin_c1(), {});
    CHECK(b.passed());
    CHECK(b.parts.size() == 7);
  }
}
