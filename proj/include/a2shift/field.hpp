#pragma once

#include <cstdint>
#include <vector>

namespace a2 {

// Largest field order the library constructs planes over.
inline constexpr int kMaxOrder = 16;

// GF(q) as explicit addition/multiplication tables over element indices
// 0..q-1. Index 0 is zero and index 1 is one. For q = p^k with k > 1 an index
// encodes the polynomial sum c_i x^i as sum c_i p^i, reduced modulo a fixed
// irreducible polynomial.
class FiniteField {
 public:
  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }

  int add(int a, int b) const noexcept { return add_[a * q_ + b]; }
  int mul(int a, int b) const noexcept { return mul_[a * q_ + b]; }
  int neg(int a) const noexcept { return neg_[a]; }
  int sub(int a, int b) const noexcept { return add(a, neg(b)); }
  // Requires a != 0.
  int inv(int a) const noexcept { return inv_[a]; }

  // Coefficients of the reduction polynomial, low degree first. Empty for
  // prime fields.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  friend FiniteField field_make(int q);

 private:
  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_;
  std::vector<std::uint8_t> neg_, inv_;
};

// Throws Error{NotPrimePower} or Error{UnsupportedOrder}.
FiniteField field_make(int q);

// Decomposes q = p^k; returns false if q is not a prime power (q >= 2).
bool prime_power(int q, int& p, int& k);

}  // namespace a2
