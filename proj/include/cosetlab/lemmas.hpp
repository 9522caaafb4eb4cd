#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cosetlab/census.hpp"
#include "cosetlab/subgroup.hpp"

namespace cosetlab {

/// Fixed identifiers of the coset-counting facts exercised by the suite.
inline constexpr std::array<std::string_view, 11> kLemmaIds = {
    "L2.1.i", "L2.1.ii", "L2.1.iii", "L2.1.iv", "L2.1.v", "L3.2",
    "L3.3",   "R3.1",    "E3.1",     "E3.2",    "E3.4"};

struct LemmaTally {
  std::string id;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_failure;

  void record(bool ok, const std::string& context);
};

struct LemmaSuiteOptions {
  /// Groups up to this order are checked on every pair/triple.
  std::size_t exhaustive_order_cap = 24;
  /// Sampled tier: checks per lemma id.
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  Count census_cap = 1'000'000;
};

struct LemmaSuiteResult {
  std::string tier;  // "exhaustive" or "sampled"
  std::uint64_t seed = 0;
  std::size_t subgroup_count = 0;
  std::uint64_t pair_count = 0;    // ordered pairs visited (exhaustive tier)
  std::uint64_t triple_count = 0;  // subgroup multisets of size 3 visited (exhaustive tier)
  std::vector<LemmaTally> tallies;  // in kLemmaIds order

  const LemmaTally& tally(std::string_view id) const;
  bool all_passed() const noexcept;
};

LemmaSuiteResult run_lemma_suite(const GroupPtr& g, std::span<const Subgroup> lattice,
                                 const LemmaSuiteOptions& opts = {});

/// Quadratic oracle for disjointability: some coset pair xH, yK is disjoint.
bool disjoint_pair_by_scan(const Subgroup& h, const Subgroup& k);

}  // namespace cosetlab
