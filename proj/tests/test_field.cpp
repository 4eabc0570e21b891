#include "doctest.h"

#include "a2shift/error.hpp"
#include "a2shift/field.hpp"

using namespace a2;

namespace {

// Field axioms by brute force over the tables.
void check_axioms(const FiniteField& f) {
  const int q = f.order();
  for (int a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (int b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      if (a != 0 && b != 0) CHECK(f.mul(a, b) != 0);
      for (int c = 0; c < q; ++c) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("every supported order satisfies the field axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
      CAPTURE(q);
      check_axioms(field_make(q));
    }
  }

  TEST_CASE("characteristic and degree") {
    const FiniteField f9 = field_make(9);
    CHECK(f9.characteristic() == 3);
    CHECK(f9.degree() == 2);
    CHECK(field_make(13).modulus().empty());
  }

  TEST_CASE("extension fields reduce by the documented polynomials") {
    // x is index p; x * x^(k-1) = x^k.
    CHECK(field_make(4).mul(2, 2) == 3);    // x^2 = x + 1
    CHECK(field_make(8).mul(2, 4) == 3);    // x^3 = x + 1
    CHECK(field_make(9).mul(3, 3) == 2);    // x^2 = -1
    CHECK(field_make(16).mul(2, 8) == 3);   // x^4 = x + 1
    CHECK(field_make(9).add(3, 3) == 6);    // 2x has coefficient 2 in degree 1
  }

  TEST_CASE("multiplicative group is cyclic") {
    for (int q : {4, 8, 9, 16}) {
      const FiniteField f = field_make(q);
      bool found = false;
      for (int g = 2; g < q && !found; ++g) {
        int x = 1, order = 0;
        do {
          x = f.mul(x, g);
          ++order;
        } while (x != 1);
        found = order == q - 1;
      }
      CHECK(found);
    }
  }

  TEST_CASE("rejected orders") {
    try {
      field_make(6);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPrimePower);
      CHECK(std::string(e.what()).find("6 is not a prime power") != std::string::npos);
    }
    CHECK_THROWS_AS(field_make(1), Error);
    try {
      field_make(32);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedOrder);
    }
    int p = 0, k = 0;
    CHECK(prime_power(27, p, k));
    CHECK(p == 3);
    CHECK(k == 3);
    CHECK_FALSE(prime_power(12, p, k));
  }
}
