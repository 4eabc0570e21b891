#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "a2shift/bitset.hpp"

namespace a2 {

// Square 0/1 matrix with bit-packed rows. Row/column indices are tile
// indices of the alphabet the matrix was built over.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : rows_(n, Bitset(n)) {}

  static BoolMatrix identity(std::size_t n);
  static BoolMatrix ones(std::size_t n);

  std::size_t size() const noexcept { return rows_.size(); }
  bool get(std::size_t i, std::size_t j) const noexcept { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool v = true) noexcept { rows_[i].assign(j, v); }

  const Bitset& row(std::size_t i) const noexcept { return rows_[i]; }
  Bitset& row(std::size_t i) noexcept { return rows_[i]; }

  std::size_t nonzeros() const noexcept;
  std::vector<std::size_t> row_sums() const;
  std::vector<std::size_t> column_sums() const;
  bool all_positive() const noexcept;

  BoolMatrix transpose() const;
  BoolMatrix& operator|=(const BoolMatrix& o);

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::vector<Bitset> rows_;
};

// Dense integer matrix with 32-bit entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  explicit IntMatrix(const BoolMatrix& m);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  std::uint32_t max_entry() const noexcept;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> data_;
};

// Boolean product: row i of a*b is the OR of the rows of b selected by the
// set bits of row i of a. Throws Error{DimensionMismatch}.
BoolMatrix mat_mul_bool(const BoolMatrix& a, const BoolMatrix& b);
IntMatrix mat_mul_int(const BoolMatrix& a, const BoolMatrix& b);
IntMatrix mat_mul_int(const IntMatrix& a, const IntMatrix& b);
// a^r for r >= 1 by repeated squaring.
BoolMatrix mat_power_bool(const BoolMatrix& a, unsigned r);

// Entrywise positivity pattern.
BoolMatrix support(const IntMatrix& m);

// Strong connectivity of the digraph with adjacency matrix m.
bool strongly_connected(const BoolMatrix& m);

// Reachability closure (paths of length >= 1) from a source.
Bitset reachable_from(const BoolMatrix& m, std::size_t source);

// Longest shortest-path distance over all ordered pairs, or empty when some
// pair is unreachable. Distance from a vertex to itself is 0.
std::optional<std::size_t> diameter(const BoolMatrix& m);

}  // namespace a2
