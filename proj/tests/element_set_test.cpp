#include "cosetlab/element_set.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using cosetlab::Element;
using cosetlab::ElementSet;

namespace {

ElementSet random_set(std::mt19937_64& rng, std::size_t universe, double density) {
  std::bernoulli_distribution coin(density);
  ElementSet s(universe);
  for (Element x = 0; x < universe; ++x) {
    if (coin(rng)) s.insert(x);
  }
  return s;
}

}  // namespace

TEST(ElementSet, BasicMembership) {
  ElementSet s(130);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.min(), 130U);
  s.insert(129);
  s.insert(64);
  s.insert(3);
  EXPECT_EQ(s.count(), 3U);
  EXPECT_EQ(s.min(), 3U);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(65));
  s.erase(3);
  EXPECT_EQ(s.min(), 64U);
  EXPECT_EQ(s.to_vector(), (std::vector<Element>{64, 129}));
}

TEST(ElementSet, FullMasksTail) {
  for (const std::size_t n : {1U, 63U, 64U, 65U, 128U, 130U}) {
    const auto f = ElementSet::full(n);
    EXPECT_EQ(f.count(), n);
    EXPECT_EQ(f.min(), 0U);
  }
}

TEST(ElementSet, WordKernelsAgreeWithSetAlgebra) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    const auto a = random_set(rng, n, 0.3), b = random_set(rng, n, 0.3), c = random_set(rng, n, 0.3);
    EXPECT_EQ((a & b).count(), cosetlab::intersection_count(a, b));
    EXPECT_EQ((a & b & c).count(), cosetlab::intersection_count3(a, b, c));
    EXPECT_EQ(!(a & b).empty(), a.intersects(b));
    EXPECT_EQ(!(a & b & c).empty(), cosetlab::intersects3(a, b, c));
    EXPECT_EQ((a & b) == a, a.is_subset_of(b));
    EXPECT_EQ((a | b).count() + (a & b).count(), a.count() + b.count());
  }
}

TEST(ElementSet, LexOrderMatchesSequenceOrder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    const double d = (trial % 3 == 0) ? 0.02 : 0.4;
    const auto a = random_set(rng, n, d), b = random_set(rng, n, d);
    const auto va = a.to_vector(), vb = b.to_vector();
    EXPECT_EQ(cosetlab::lex_less(a, b), va < vb);
  }
}

TEST(ElementSet, PrefixIsSmaller) {
  const auto a = ElementSet::from(100, std::vector<Element>{1, 5});
  const auto b = ElementSet::from(100, std::vector<Element>{1, 5, 99});
  EXPECT_TRUE(cosetlab::lex_less(a, b));
  EXPECT_FALSE(cosetlab::lex_less(b, a));
  EXPECT_FALSE(cosetlab::lex_less(a, a));
}
