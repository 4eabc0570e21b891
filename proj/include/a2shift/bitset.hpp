#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace a2 {

// Fixed-width dynamic bitset. Width is set at construction; all binary
// operations require equal widths.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t width)
      : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return width_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits));
  }
  void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

  void set_all() noexcept;
  void clear() noexcept;

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  bool all() const noexcept { return count() == width_; }

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }

  // Indices of all set bits, ascending.
  std::vector<std::size_t> indices() const;

  Bitset& operator|=(const Bitset& o) noexcept;
  Bitset& operator&=(const Bitset& o) noexcept;
  Bitset& and_not(const Bitset& o) noexcept;

  std::size_t and_count(const Bitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  std::span<const word_type> words() const noexcept { return words_; }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<word_type> words_;
};

}  // namespace a2
