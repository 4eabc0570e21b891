#include "doctest.h"

#include <random>

#include "a2shift/bool_matrix.hpp"
#include "a2shift/error.hpp"
#include "a2shift/subshift.hpp"

using namespace a2;

namespace {

BoolMatrix random_matrix(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, coin(rng));
  return m;
}

// Wielandt's digraph: a cycle of length n plus one chord, exponent (n-1)^2+1.
BoolMatrix wielandt(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1);
  m.set(n - 1, 0);
  m.set(n - 1, 1);
  return m;
}

// Least r with m^r positive by plain repeated multiplication.
unsigned naive_exponent(const BoolMatrix& m, unsigned cap) {
  BoolMatrix p = m;
  for (unsigned r = 1; r <= cap; ++r) {
    if (p.all_positive()) return r;
    p = mat_mul_bool(p, m);
  }
  return 0;
}

}  // namespace

TEST_SUITE("bool_matrix") {
  TEST_CASE("products agree with the definition") {
    std::mt19937 rng(11);
    for (std::size_t n : {1u, 5u, 21u, 70u}) {
      const BoolMatrix a = random_matrix(n, 0.2, rng), b = random_matrix(n, 0.3, rng);
      const BoolMatrix c = mat_mul_bool(a, b);
      const IntMatrix ci = mat_mul_int(a, b);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::uint32_t sum = 0;
          for (std::size_t k = 0; k < n; ++k) sum += a.get(i, k) && b.get(k, j);
          CHECK(ci(i, j) == sum);
          CHECK(c.get(i, j) == (sum > 0));
        }
      CHECK(support(ci) == c);
      CHECK(mat_mul_int(IntMatrix(a), IntMatrix(b)) == ci);
    }
  }

  TEST_CASE("powers") {
    std::mt19937 rng(3);
    const BoolMatrix a = random_matrix(13, 0.15, rng);
    BoolMatrix p = a;
    for (unsigned r = 2; r <= 9; ++r) {
      p = mat_mul_bool(p, a);
      CHECK(mat_power_bool(a, r) == p);
    }
    CHECK(mat_power_bool(a, 1) == a);
  }

  TEST_CASE("identity, ones, transpose, sums") {
    const BoolMatrix id = BoolMatrix::identity(4);
    CHECK(id.nonzeros() == 4);
    CHECK(BoolMatrix::ones(4).all_positive());
    CHECK_FALSE(id.all_positive());
    BoolMatrix m(3);
    m.set(0, 2);
    m.set(1, 2);
    CHECK(m.transpose().get(2, 0));
    CHECK(m.row_sums() == std::vector<std::size_t>{1, 1, 0});
    CHECK(m.column_sums() == std::vector<std::size_t>{0, 0, 2});
    BoolMatrix u = m;
    u |= BoolMatrix::identity(3);
    CHECK(u.nonzeros() == 5);
  }

  TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(mat_mul_bool(BoolMatrix(2), BoolMatrix(3)), Error);
    CHECK_THROWS_AS(mat_mul_int(BoolMatrix(2), BoolMatrix(3)), Error);
  }

  TEST_CASE("connectivity, reachability, diameter") {
    const BoolMatrix w = wielandt(5);
    CHECK(strongly_connected(w));
    CHECK(diameter(w).has_value());
    BoolMatrix path(3);
    path.set(0, 1);
    path.set(1, 2);
    CHECK_FALSE(strongly_connected(path));
    CHECK_FALSE(diameter(path).has_value());
    const Bitset r = reachable_from(path, 0);
    CHECK(r.indices() == std::vector<std::size_t>{1, 2});
    CHECK(reachable_from(path, 2).none());
    BoolMatrix cycle(3);
    cycle.set(0, 1);
    cycle.set(1, 2);
    cycle.set(2, 0);
    CHECK(diameter(cycle) == std::optional<std::size_t>{2});
    CHECK(reachable_from(cycle, 0).test(0));
  }

  TEST_CASE("primitivity exponents") {
    for (std::size_t n : {3u, 4u, 5u, 6u}) {
      CAPTURE(n);
      const auto e = primitivity(wielandt(n), 64);
      REQUIRE(e.has_value());
      CHECK(*e == (n - 1) * (n - 1) + 1);
      CHECK(*e == naive_exponent(wielandt(n), 64));
    }
    // A cycle is irreducible but periodic.
    BoolMatrix cycle(4);
    for (std::size_t i = 0; i < 4; ++i) cycle.set(i, (i + 1) % 4);
    CHECK_FALSE(primitivity(cycle, 64).has_value());
    CHECK_FALSE(primitivity(wielandt(6), 25).has_value());
    CHECK(primitivity(wielandt(6), 26) == std::optional<unsigned>{26});
  }

  TEST_CASE("random primitive matrices match the naive exponent") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const BoolMatrix a = random_matrix(9, 0.2, rng);
      const unsigned naive = naive_exponent(a, 40);
      const auto fast = primitivity(a, 40);
      CHECK(fast.value_or(0) == naive);
    }
  }
}
