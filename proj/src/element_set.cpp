#include "cosetlab/element_set.hpp"

#include <cassert>

namespace cosetlab {

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (const auto tail = universe % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  return s;
}

ElementSet ElementSet::from(std::size_t universe, std::span<const Element> elems) {
  ElementSet s(universe);
  for (const Element x : elems) {
    assert(x < universe);
    s.insert(x);
  }
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (const Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::empty() const noexcept {
  for (const Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

Element ElementSet::min() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Element>(w * kWordBits +
                                  static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return static_cast<Element>(universe_);
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::vector<Element> ElementSet::to_vector() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = universe_;
  for (const Word w : words_) {
    h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool lex_less(const ElementSet& a, const ElementSet& b) noexcept {
  assert(a.universe() == b.universe());
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    const auto diff = wa[w] ^ wb[w];
    if (diff == 0) continue;
    // First element where membership differs. The set holding it is smaller
    // in the sequence order unless the other sequence has already ended there.
    const auto bit = static_cast<std::size_t>(std::countr_zero(diff));
    const bool a_has = (wa[w] >> bit) & 1U;
    const auto rest_mask = ~((ElementSet::Word{2} << bit) - 1);
    auto tail_nonempty = [&](std::span<const ElementSet::Word> words) {
      if (bit + 1 < ElementSet::kWordBits && (words[w] & rest_mask) != 0) return true;
      for (std::size_t v = w + 1; v < words.size(); ++v) {
        if (words[v] != 0) return true;
      }
      return false;
    };
    if (a_has) {
      // a has x, b does not: b continues with something larger, or ends.
      // If b ends here, b is a prefix of a and therefore smaller.
      return tail_nonempty(wb);
    }
    return !tail_nonempty(wa);
  }
  return false;
}

bool intersects3(const ElementSet& a, const ElementSet& b, const ElementSet& c) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  const auto wc = c.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    if ((wa[w] & wb[w] & wc[w]) != 0) return true;
  }
  return false;
}

std::size_t intersection_count(const ElementSet& a, const ElementSet& b) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t c = 0;
  for (std::size_t w = 0; w < wa.size(); ++w) {
    c += static_cast<std::size_t>(std::popcount(wa[w] & wb[w]));
  }
  return c;
}

std::size_t intersection_count3(const ElementSet& a, const ElementSet& b,
                                const ElementSet& c) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  const auto wc = c.words();
  std::size_t n = 0;
  for (std::size_t w = 0; w < wa.size(); ++w) {
    n += static_cast<std::size_t>(std::popcount(wa[w] & wb[w] & wc[w]));
  }
  return n;
}

}  // namespace cosetlab
