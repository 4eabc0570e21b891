#include "a2shift/bool_matrix.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "a2shift/error.hpp"

namespace a2 {

namespace {

void require_same(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorCode::DimensionMismatch,
                "matrix dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::ones(std::size_t n) {
  BoolMatrix m(n);
  for (auto& r : m.rows_) r.set_all();
  return m;
}

std::size_t BoolMatrix::nonzeros() const noexcept {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

std::vector<std::size_t> BoolMatrix::row_sums() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.count());
  return out;
}

std::vector<std::size_t> BoolMatrix::column_sums() const {
  std::vector<std::size_t> out(rows_.size(), 0);
  for (const auto& r : rows_)
    for (std::size_t j = r.find_first(); j < r.size(); j = r.find_next(j + 1)) ++out[j];
  return out;
}

bool BoolMatrix::all_positive() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const Bitset& r) { return r.all(); });
}

BoolMatrix BoolMatrix::transpose() const {
  BoolMatrix t(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = rows_[i].find_first(); j < size(); j = rows_[i].find_next(j + 1)) t.set(j, i);
  return t;
}

BoolMatrix& BoolMatrix::operator|=(const BoolMatrix& o) {
  require_same(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) rows_[i] |= o.rows_[i];
  return *this;
}

IntMatrix::IntMatrix(const BoolMatrix& m) : IntMatrix(m.size()) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) data_[i * n_ + j] = m.get(i, j) ? 1u : 0u;
}

std::uint32_t IntMatrix::max_entry() const noexcept {
  return data_.empty() ? 0u : *std::max_element(data_.begin(), data_.end());
}

BoolMatrix mat_mul_bool(const BoolMatrix& a, const BoolMatrix& b) {
  require_same(a.size(), b.size());
  const std::size_t n = a.size();
  BoolMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Bitset& ai = a.row(i);
    Bitset& ci = c.row(i);
    for (std::size_t k = ai.find_first(); k < n; k = ai.find_next(k + 1)) ci |= b.row(k);
  }
  return c;
}

IntMatrix mat_mul_int(const IntMatrix& a, const IntMatrix& b) {
  require_same(a.size(), b.size());
  const std::size_t n = a.size();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint32_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix mat_mul_int(const BoolMatrix& a, const BoolMatrix& b) {
  return mat_mul_int(IntMatrix(a), IntMatrix(b));
}

BoolMatrix mat_power_bool(const BoolMatrix& a, unsigned r) {
  if (r == 0) return BoolMatrix::identity(a.size());
  BoolMatrix result = a;
  BoolMatrix base = a;
  unsigned e = r - 1;
  while (e > 0) {
    if (e & 1u) result = mat_mul_bool(result, base);
    e >>= 1u;
    if (e > 0) base = mat_mul_bool(base, base);
  }
  return result;
}

BoolMatrix support(const IntMatrix& m) {
  BoolMatrix s(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j) > 0) s.set(i, j);
  return s;
}

Bitset reachable_from(const BoolMatrix& m, std::size_t source) {
  const std::size_t n = m.size();
  Bitset seen(n);
  std::deque<std::size_t> queue;
  for (std::size_t j = m.row(source).find_first(); j < n; j = m.row(source).find_next(j + 1)) {
    seen.set(j);
    queue.push_back(j);
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    Bitset fresh = m.row(u);
    fresh.and_not(seen);
    for (std::size_t j = fresh.find_first(); j < n; j = fresh.find_next(j + 1)) queue.push_back(j);
    seen |= fresh;
  }
  return seen;
}

bool strongly_connected(const BoolMatrix& m) {
  if (m.size() == 0) return false;
  if (m.size() == 1) return m.get(0, 0);
  return reachable_from(m, 0).all() && reachable_from(m.transpose(), 0).all();
}

std::optional<std::size_t> diameter(const BoolMatrix& m) {
  const std::size_t n = m.size();
  std::size_t best = 0;
  for (std::size_t s = 0; s < n; ++s) {
    Bitset seen(n);
    seen.set(s);
    Bitset frontier = seen;
    std::size_t depth = 0;
    while (!seen.all()) {
      Bitset next(n);
      for (std::size_t u = frontier.find_first(); u < n; u = frontier.find_next(u + 1)) next |= m.row(u);
      next.and_not(seen);
      if (next.none()) return std::nullopt;
      seen |= next;
      frontier = std::move(next);
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

}  // namespace a2
