#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace qim {

// Dynamic bitset with a size fixed at construction. All binary operations
// assume operands of equal size; enumeration code relies on cheap equality,
// hashing and subset tests.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // set difference: keeps bits of *this not present in o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // first set bit at or after `from`, npos when exhausted
  std::size_t find_next(std::size_t from = 0) const {
    if (from >= size_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] >> (from & 63);
    if (w) return from + static_cast<std::size_t>(std::countr_zero(w));
    for (++wi; wi < words_.size(); ++wi)
      if (words_[wi])
        return (wi << 6) + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return npos;
  }

  template <typename F>
  void for_each(F f) const {
    for (std::size_t i = find_next(0); i != npos; i = find_next(i + 1)) f(i);
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  // canonical enumeration order: cardinality, then the set whose lowest
  // differing element is present comes first (lexicographic on sorted lists)
  static bool canonical_less(const Bitset& a, const Bitset& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (a.words_[i] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 1099511628211ull + static_cast<std::size_t>(w);
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qim

template <>
struct std::hash<qim::Bitset> {
  std::size_t operator()(const qim::Bitset& b) const { return b.hash(); }
};
