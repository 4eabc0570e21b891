#include "doctest.h"

#include <set>

#include "a2shift/error.hpp"
#include "a2shift/subshift.hpp"

using namespace a2;

namespace {

std::set<Tile> row_tiles(const TrianglePresentation& p, const BoolMatrix& m, Tile t) {
  std::set<Tile> out;
  for (std::size_t j : m.row(static_cast<std::size_t>(p.index_of(t))).indices()) out.insert(p.tile(j));
  return out;
}

}  // namespace

TEST_SUITE("subshift") {
  TEST_CASE("relation sizes and margins on C.1") {
    const TrianglePresentation c1 = builtin_c1();
    for (RelationKind k : {RelationKind::M1, RelationKind::M2, RelationKind::Wall}) {
      CAPTURE(to_string(k));
      const BoolMatrix m = build_relation(c1, k);
      CHECK(m.size() == 21);
      CHECK(m.nonzeros() == 84);
      CHECK(m.row_sums() == std::vector<std::size_t>(21, 4));
      CHECK(m.column_sums() == std::vector<std::size_t>(21, 4));
    }
  }

  TEST_CASE("closed forms agree with the lattice oracle") {
    const TrianglePresentation c1 = builtin_c1();
    for (RelationKind k : {RelationKind::M1, RelationKind::M2, RelationKind::Wall}) {
      const VerificationReport r = check_relation_against_oracle(c1, k);
      CHECK(r.passed());
      CHECK(r.examined == 441);
    }
  }

  TEST_CASE("rows for (x0,x2,x3)") {
    const TrianglePresentation c1 = builtin_c1();
    const Tile t{0, 2, 3};
    CHECK(row_tiles(c1, build_M1(c1), t) == std::set<Tile>{{1, 2, 6}, {1, 5, 4}, {6, 0, 0}, {6, 1, 2}});
    CHECK(row_tiles(c1, build_wall(c1), t) == std::set<Tile>{{1, 3, 5}, {3, 5, 1}, {4, 1, 5}, {5, 4, 1}});
  }

  TEST_CASE("M1 and M2 commute") {
    const TrianglePresentation c1 = builtin_c1();
    const IntMatrix a = mat_mul_int(build_M1(c1), build_M2(c1));
    const IntMatrix b = mat_mul_int(build_M2(c1), build_M1(c1));
    CHECK(a == b);
    CHECK(a.max_entry() == 2);
  }

  TEST_CASE("wall relation is M1 conjugated by rotation") {
    const TrianglePresentation c1 = builtin_c1();
    const BoolMatrix m1 = build_M1(c1), wall = build_wall(c1);
    for (const Tile& t : c1.tiles())
      for (const Tile& u : c1.tiles()) {
        const auto i = static_cast<std::size_t>(c1.index_of(t)), j = static_cast<std::size_t>(c1.index_of(u));
        const auto ri = static_cast<std::size_t>(c1.index_of(rotate(t)));
        const auto rj = static_cast<std::size_t>(c1.index_of(rotate(u)));
        CHECK(wall.get(i, j) == m1.get(ri, rj));
      }
  }

  TEST_CASE("primitivity and irreducibility on C.1") {
    const TrianglePresentation c1 = builtin_c1();
    const BoolMatrix m1 = build_M1(c1), m2 = build_M2(c1), wall = build_wall(c1);
    CHECK(primitivity(m1) == std::optional<unsigned>{4});
    CHECK(primitivity(m2) == std::optional<unsigned>{4});
    CHECK(primitivity(wall) == std::optional<unsigned>{4});
    CHECK_FALSE(mat_power_bool(m1, 3).all_positive());
    CHECK(mat_power_bool(m1, 6).all_positive());
    CHECK(strongly_connected(wall));
    CHECK(diameter(wall) == std::optional<std::size_t>{4});
    const VerificationReport r = is_irreducible_2d(m1, m2);
    CHECK(r.passed());
    CHECK(r.stats["commutes"] == true);
  }

  TEST_CASE("irreducibility fails on a disconnected pair") {
    BoolMatrix a(2);
    a.set(0, 0);
    a.set(1, 1);
    const VerificationReport r = is_irreducible_2d(a, a, 4);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.counterexamples.empty());
  }

  TEST_CASE("connector tiles") {
    const TrianglePresentation c1 = builtin_c1();
    const Tile t{0, 2, 3}, u{1, 3, 5};
    const Tile c = down_tile_between(t, u, c1);
    CHECK(c1.contains(c));
    CHECK(c.x == u.z);
    CHECK(c.y == t.y);
    CHECK_THROWS_AS(down_tile_between(t, Tile{0, 0, 6}, c1), Error);
  }

  TEST_CASE("strips between every ordered pair") {
    const TrianglePresentation c1 = builtin_c1();
    const BoolMatrix wall = build_wall(c1);
    for (const Tile& a : c1.tiles())
      for (const Tile& b : c1.tiles()) {
        const StripWitness w = find_strip(c1, wall, a, b);
        CHECK(w.tiles.front() == a);
        CHECK(w.tiles.back() == b);
        CHECK(w.steps() <= 4);
        CHECK(w.tiles.size() == w.steps() + 1);
        CHECK(strip_is_valid(c1, w));
      }
  }

  TEST_CASE("invalid strips are caught") {
    const TrianglePresentation c1 = builtin_c1();
    StripWitness w = find_strip(c1, Tile{0, 2, 3}, Tile{3, 4, 6});
    REQUIRE(w.steps() > 0);
    w.connectors.front() = w.tiles.front();
    CHECK_FALSE(strip_is_valid(c1, w));
  }

  TEST_CASE("concatenation") {
    const TrianglePresentation c1 = builtin_c1();
    const Tile a{0, 2, 3}, b{1, 3, 5}, c{0, 0, 6};
    const StripWitness w = concatenate(find_strip(c1, a, b), find_strip(c1, b, c));
    CHECK(w.tiles.front() == a);
    CHECK(w.tiles.back() == c);
    CHECK(strip_is_valid(c1, w));
    CHECK_THROWS(concatenate(find_strip(c1, a, b), find_strip(c1, a, c)));
  }

  TEST_CASE("render is deterministic and labelled") {
    const TrianglePresentation c1 = builtin_c1();
    const StripWitness w = find_strip(c1, Tile{0, 0, 6}, c1.tile(20));
    const std::string s = render_strip(c1, w);
    CHECK(s == render_strip(c1, w));
    CHECK(s.rfind("strip: ", 0) == 0);
    CHECK(s.find("/____\\") != std::string::npos);
    CHECK(s.find("t0 = (x0,x0,x6)") != std::string::npos);
    const StripWitness zero = find_strip(c1, Tile{0, 0, 6}, Tile{0, 0, 6});
    CHECK(zero.steps() == 0);
    CHECK(render_strip(c1, zero).find("strip: 0 steps") != std::string::npos);
  }

  TEST_CASE("relation names") {
    CHECK(relation_from_string("wall") == RelationKind::Wall);
    CHECK(to_string(RelationKind::M2) == "M2");
    CHECK_THROWS_AS(relation_from_string("M3"), Error);
  }

  TEST_CASE("every presentation of the Fano sweep commutes and is primitive") {
    const LambdaSweepSummary s = sweep_all_lambdas_q2(pg2(2), 1);
    std::map<unsigned, std::size_t> exponents;
    for (const auto& p : s.presentations) {
      const BoolMatrix m1 = build_M1(p), m2 = build_M2(p);
      CHECK(mat_mul_int(m1, m2) == mat_mul_int(m2, m1));
      const auto e = primitivity(m1);
      REQUIRE(e.has_value());
      ++exponents[*e];
    }
    CHECK(exponents == std::map<unsigned, std::size_t>{{3, 240}, {4, 504}});
  }
}
