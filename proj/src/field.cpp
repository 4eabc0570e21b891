#include "a2shift/field.hpp"

#include <string>

#include "a2shift/error.hpp"

namespace a2 {

namespace {

// Fixed reduction polynomials, low degree first.
std::vector<int> builtin_modulus(int q) {
  switch (q) {
    case 4: return {1, 1, 1};         // x^2 + x + 1
    case 8: return {1, 1, 0, 1};      // x^3 + x + 1
    case 9: return {1, 0, 1};         // x^2 + 1 over GF(3)
    case 16: return {1, 1, 0, 0, 1};  // x^4 + x + 1
    default: return {};
  }
}

std::vector<int> digits(int value, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

bool prime_power(int q, int& p, int& k) {
  if (q < 2) return false;
  int f = 2;
  while (q % f != 0) ++f;
  p = f;
  k = 0;
  while (q % f == 0) {
    q /= f;
    ++k;
  }
  return q == 1;
}

FiniteField field_make(int q) {
  int p = 0, k = 0;
  if (q > kMaxOrder && q >= 2 && prime_power(q, p, k))
    throw Error(ErrorCode::UnsupportedOrder,
                "order " + std::to_string(q) + " exceeds the supported maximum " + std::to_string(kMaxOrder));
  if (!prime_power(q, p, k))
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");

  FiniteField f;
  f.q_ = q;
  f.p_ = p;
  f.k_ = k;
  f.modulus_ = builtin_modulus(q);
  const auto n = static_cast<std::size_t>(q);
  f.add_.assign(n * n, 0);
  f.mul_.assign(n * n, 0);
  f.neg_.assign(n, 0);
  f.inv_.assign(n, 0);

  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, k);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, k);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;

      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      // Reduce by the monic modulus from the top degree down.
      for (int deg = 2 * k - 2; deg >= k; --deg) {
        const int c = prod[deg];
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i)
          prod[deg - k + i] = ((prod[deg - k + i] - c * f.modulus_[i]) % p + p) % p;
      }
      prod.resize(k);

      f.add_[a * n + b] = static_cast<std::uint8_t>(from_digits(sum, p));
      f.mul_[a * n + b] = static_cast<std::uint8_t>(from_digits(prod, p));
    }
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) == 0) f.neg_[a] = static_cast<std::uint8_t>(b);
      if (a != 0 && f.mul(a, b) == 1) f.inv_[a] = static_cast<std::uint8_t>(b);
    }
  return f;
}

}  // namespace a2
