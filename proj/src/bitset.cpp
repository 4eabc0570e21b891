#include "a2shift/bitset.hpp"

namespace a2 {

void Bitset::set_all() noexcept {
  for (auto& w : words_) w = ~word_type{0};
  if (const std::size_t tail = width_ % kWordBits; tail != 0 && !words_.empty())
    words_.back() &= (word_type{1} << tail) - 1;
}

void Bitset::clear() noexcept {
  for (auto& w : words_) w = 0;
}

bool Bitset::any() const noexcept {
  for (word_type w : words_)
    if (w != 0) return true;
  return false;
}

std::size_t Bitset::find_next(std::size_t from) const noexcept {
  if (from >= width_) return width_;
  std::size_t wi = from / kWordBits;
  word_type w = words_[wi] & (~word_type{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return width_;
    w = words_[wi];
  }
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t i = find_first(); i < width_; i = find_next(i + 1)) out.push_back(i);
  return out;
}

Bitset& Bitset::operator|=(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::and_not(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

}  // namespace a2
