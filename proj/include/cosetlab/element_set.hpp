#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cosetlab {

using Element = std::uint32_t;

/// Fixed-width bitset over the element ids 0..universe-1 of one group.
///
/// Every set built for the same group has the same word count, so the binary
/// operations below are straight word loops. Mixing sets of different
/// universes is a programming error and is caught only by assertions.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static ElementSet full(std::size_t universe);
  static ElementSet from(std::size_t universe, std::span<const Element> elems);

  std::size_t universe() const noexcept { return universe_; }
  std::span<const Word> words() const noexcept { return words_; }

  void insert(Element x) noexcept { words_[x / kWordBits] |= Word{1} << (x % kWordBits); }
  void erase(Element x) noexcept { words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits)); }
  bool contains(Element x) const noexcept {
    return (words_[x / kWordBits] >> (x % kWordBits)) & Word{1};
  }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  /// Smallest member; universe() when empty.
  Element min() const noexcept;

  bool intersects(const ElementSet& other) const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;

  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator|=(const ElementSet& other) noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Element>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> to_vector() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

inline ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
inline ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

/// Lexicographic order on the ascending element sequences.
bool lex_less(const ElementSet& a, const ElementSet& b) noexcept;

/// Allocation-free tests used in the search kernels.
bool intersects3(const ElementSet& a, const ElementSet& b, const ElementSet& c) noexcept;
std::size_t intersection_count(const ElementSet& a, const ElementSet& b) noexcept;
std::size_t intersection_count3(const ElementSet& a, const ElementSet& b,
                                const ElementSet& c) noexcept;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace cosetlab
