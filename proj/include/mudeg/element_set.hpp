#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mudeg {

// Fixed-universe bitset over element-table indices. Subgroups, cosets and
// conjugates are all stored this way so that intersection and containment
// are word-parallel.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void insert(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void erase(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  // Orders by universe, then word-by-word from the low end. Only used to
  // give lattices a schedule-independent canonical order.
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) = default;

  /// Calls f(i) for every member, in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(wi * kWordBits + static_cast<std::size_t>(bit));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Smallest member, or universe() when empty.
  std::size_t first() const noexcept {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi] != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return universe_;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ universe_;
    for (Word w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }

  /// Lower-case hex, most significant word first.
  std::string to_hex() const;
  static ElementSet from_hex(std::size_t universe, const std::string& hex);

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace mudeg
