#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace metricdim {

/// Fixed-capacity set of vertex indices backed by 64-bit words.
class VertexSet {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t bits_per_word = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + bits_per_word - 1) / bits_per_word, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t i = 0; i < capacity; ++i) s.set(i);
    return s;
  }

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<word_type>& words() const noexcept { return words_; }

  void set(std::size_t i) noexcept { words_[i / bits_per_word] |= word_type{1} << (i % bits_per_word); }
  void reset(std::size_t i) noexcept { words_[i / bits_per_word] &= ~(word_type{1} << (i % bits_per_word)); }
  bool test(std::size_t i) const noexcept {
    return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  /// Index of the lowest member, or capacity() when empty.
  std::size_t first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * bits_per_word + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return capacity_;
  }

  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  /// this &= ~o
  VertexSet& subtract(const VertexSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      word_type w = words_[k];
      while (w) {
        fn(k * bits_per_word + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(static_cast<int>(v)); });
    return out;
  }

private:
  std::size_t capacity_ = 0;
  std::vector<word_type> words_;
};

}  // namespace metricdim
