#include "cosetlab/verifier.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "cosetlab/error.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cosetlab;
using testing_support::group;
using testing_support::sub;

namespace {

// Naive candidate filter: all non-decreasing k-tuples, checked pair by pair.
std::vector<Clique> naive_cliques(const FiniteGroup& g, const std::vector<Subgroup>& l, int k) {
  std::vector<Clique> out;
  Clique cur;
  const auto ok = [&](std::size_t a, std::size_t b) {
    return std::gcd(l[a].index(), l[b].index()) < static_cast<std::size_t>(k) &&
           oracle::has_disjoint_pair(g, oracle::as_set(l[a]), oracle::as_set(l[b]));
  };
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == static_cast<std::size_t>(k)) {
      out.push_back(cur);
      return;
    }
    for (std::size_t x = from; x < l.size(); ++x) {
      if (!std::all_of(cur.begin(), cur.end(), [&](std::size_t y) { return ok(x, y); })) continue;
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST(PairTable, CoversUnorderedPairs) {
  const auto g = group("S4");
  const auto l = enumerate_subgroups(g);
  const auto t = pair_table(l);
  ASSERT_EQ(t.size(), l.size() * (l.size() + 1) / 2);
  for (const auto& p : t) {
    ASSERT_LE(p.first, p.second);
    ASSERT_EQ(p.gcd_index, std::gcd(l[p.first].index(), l[p.second].index()));
    ASSERT_EQ(p.disjointable, disjointable(l[p.first], l[p.second]));
  }
}

TEST(CandidateCliques, MatchNaiveFilter) {
  for (const auto& name : {"S3", "C6", "D4", "Q8", "C2xC2xC2", "C12", "A4"}) {
    const auto g = group(name);
    const auto l = enumerate_subgroups(g);
    for (int k = kMinK; k <= 5; ++k) {
      ASSERT_EQ(candidate_cliques(l, k), naive_cliques(*g, l, k)) << name << " k=" << k;
    }
  }
}

TEST(CandidateCliques, RangeAndCap) {
  const auto g = group("C2xC2xC2");
  const auto l = enumerate_subgroups(g);
  EXPECT_THROW(candidate_cliques(l, 1), Error);
  EXPECT_THROW(candidate_cliques(l, 7), Error);
  const auto all = candidate_cliques(l, 3);
  ASSERT_FALSE(all.empty());
  EXPECT_NO_THROW(candidate_cliques(l, 3, all.size()));
  try {
    candidate_cliques(l, 3, all.size() - 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CliqueCapExceeded);
    EXPECT_TRUE(e.is_cap());
  }
}

TEST(Search, FindsDisjointTripleOfTrivialCosets) {
  const auto g = group("C6");
  const Subgroup t[] = {Subgroup::trivial(g), Subgroup::trivial(g), Subgroup::trivial(g)};
  SearchStats stats;
  const auto v = search_disjoint_tuple(t, &stats);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->cosets_pairwise_disjoint());
  EXPECT_FALSE(v->is_counterexample());  // gcd 6 >= 3
  EXPECT_GT(stats.coset_placements, 0U);
}

TEST(Search, NoneForCoprimeIndices) {
  const auto g = group("C6");
  const Subgroup t[] = {sub(g, {0, 2, 4}), sub(g, {0, 3})};
  EXPECT_FALSE(search_disjoint_tuple(t).has_value());
}

TEST(Search, AgreesWithOracle) {
  for (const auto& name : {"S3", "D4", "Q8", "C12", "A4", "C2xC2xC2"}) {
    const auto g = group(name);
    const auto l = enumerate_subgroups(g);
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = a; b < l.size(); ++b) {
        for (std::size_t c = b; c < l.size(); ++c) {
          const Subgroup t[] = {l[a], l[b], l[c]};
          const auto v = search_disjoint_tuple(t);
          const bool expected = oracle::exists_disjoint_family(
              *g, {oracle::as_set(l[a]), oracle::as_set(l[b]), oracle::as_set(l[c])});
          ASSERT_EQ(v.has_value(), expected) << name;
          if (v) {
            ASSERT_TRUE(v->cosets_pairwise_disjoint());
            ASSERT_EQ(v->reps.size(), 3U);
            for (std::size_t i = 0; i < 3; ++i) ASSERT_EQ(v->subgroups[i], t[i]);
          }
        }
      }
    }
  }
}

TEST(Search, FourSlotsAgreeWithOracle) {
  const auto g = group("C2xC2xC2");
  const auto l = enumerate_subgroups(g);
  for (std::size_t a = 0; a < l.size(); a += 2) {
    for (std::size_t b = a; b < l.size(); b += 3) {
      for (std::size_t c = b; c < l.size(); ++c) {
        for (std::size_t d = c; d < l.size(); d += 2) {
          const Subgroup t[] = {l[a], l[b], l[c], l[d]};
          const bool expected = oracle::exists_disjoint_family(
              *g, {oracle::as_set(l[a]), oracle::as_set(l[b]), oracle::as_set(l[c]),
                   oracle::as_set(l[d])});
          ASSERT_EQ(search_disjoint_tuple(t).has_value(), expected);
        }
      }
    }
  }
}

TEST(Violation, RederivesCosets) {
  const auto g = group("C4");
  const auto h = sub(g, {0, 2});
  Violation v{.k = 2, .subgroups = {h, h}, .lattice_ids = {}, .reps = {0, 1},
              .gcd_matrix = {{2, 2}, {2, 2}}};
  EXPECT_TRUE(v.cosets_pairwise_disjoint());
  EXPECT_FALSE(v.is_counterexample());  // gcd 2 is not below k
  v.k = 3;
  EXPECT_FALSE(v.is_counterexample());  // two cosets for k = 3
  v.reps = {0, 2};
  EXPECT_FALSE(v.cosets_pairwise_disjoint());
}

TEST(Verify, SmallGroupsHaveNoViolations) {
  for (const auto& name : testing_support::catalog_up_to(24)) {
    const auto g = group(name);
    const auto l = enumerate_subgroups(g);
    for (int k = 2; k <= 4; ++k) {
      const auto r = verify_group(g, l, k);
      ASSERT_TRUE(r.violations.empty()) << name << " k=" << k;
      ASSERT_TRUE(r.confirmed());
      ASSERT_FALSE(r.implementation_bug());
      ASSERT_EQ(r.subgroup_count, l.size());
      ASSERT_EQ(r.group_order, g->order());
      ASSERT_EQ(r.candidate_cliques, candidate_cliques(l, k).size());
    }
  }
}

TEST(Verify, OracleFindsNoFamilyWhereFilterPrunes) {
  // Brute force without the clique filter: every multiset whose pairwise index
  // gcds are below k must admit no pairwise-disjoint coset family.
  for (const auto& name : {"C4", "S3", "C6", "D4", "Q8", "C2xC2xC2", "C12", "A4"}) {
    const auto g = group(name);
    const auto l = enumerate_subgroups(g);
    for (int k = 2; k <= 4; ++k) {
      std::vector<std::size_t> cur;
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cur.size() == static_cast<std::size_t>(k)) {
          std::vector<oracle::Set> sets;
          for (const auto i : cur) sets.push_back(oracle::as_set(l[i]));
          ASSERT_FALSE(oracle::exists_disjoint_family(*g, sets)) << name << " k=" << k;
          return;
        }
        for (std::size_t x = from; x < l.size(); ++x) {
          if (std::any_of(cur.begin(), cur.end(), [&](std::size_t y) {
                return std::gcd(l[x].index(), l[y].index()) >= static_cast<std::size_t>(k);
              })) {
            continue;
          }
          cur.push_back(x);
          rec(x);
          cur.pop_back();
        }
      };
      rec(0);
    }
  }
}

TEST(Verify, OpenRangeOnSmallGroups) {
  for (const auto& name : {"C12", "S4", "C2xC2xC2", "D6"}) {
    const auto g = group(name);
    for (int k = 5; k <= 6; ++k) {
      const auto r = verify_group(g, k);
      EXPECT_FALSE(r.theorem_range());
      EXPECT_TRUE(r.violations.empty()) << name << " k=" << k;
    }
  }
}

TEST(Verify, WorkerCountDoesNotChangeResult) {
  const auto g = group("S4");
  const auto l = enumerate_subgroups(g);
  for (int k = 2; k <= 5; ++k) {
    const auto a = verify_group(g, l, k, {.jobs = 1});
    const auto b = verify_group(g, l, k, {.jobs = 4});
    EXPECT_EQ(a.candidate_cliques, b.candidate_cliques);
    EXPECT_EQ(a.coset_tuples_examined, b.coset_tuples_examined);
    EXPECT_EQ(a.violations.size(), b.violations.size());
  }
}

TEST(Verify, LargerProductsHaveNoViolations) {
  for (const auto& name : {"S4xC2", "D4xC3", "C2xC2xC2xC2", "S3xS3", "A4xC2", "C3xC3xC3", "Q8xC2"}) {
    const auto g = group(name);
    const auto l = enumerate_subgroups(g);
    for (int k = 2; k <= 5; ++k) {
      EXPECT_TRUE(verify_group(g, l, k, {.clique_cap = SIZE_MAX}).violations.empty())
          << name << " k=" << k;
    }
  }
}

TEST(Verify, RejectsBadK) {
  const auto g = group("C6");
  EXPECT_THROW(verify_group(g, 1), Error);
  EXPECT_THROW(verify_group(g, 7), Error);
}

TEST(Verify, CliqueCap) {
  const auto g = group("C2xC2xC2");
  try {
    verify_group(g, 4, {.clique_cap = 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CliqueCapExceeded);
  }
}
