#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cosetlab/census.hpp"
#include "cosetlab/coset.hpp"
#include "cosetlab/subgroup.hpp"

namespace cosetlab {

constexpr int kMinK = 2;
constexpr int kMaxK = 6;
/// Values of k for which the disjoint-coset statement is a theorem.
constexpr int kProvenMaxK = 4;

struct PairStats {
  std::size_t first = 0;   // lattice positions, first <= second
  std::size_t second = 0;
  Count gcd_index = 0;
  bool disjointable = false;
};

/// Every unordered pair of lattice entries, equal pairs included, in
/// (first, second) order.
std::vector<PairStats> pair_table(std::span<const Subgroup> lattice);

using Clique = std::vector<std::size_t>;

/// Size-k multisets of lattice positions (non-decreasing) in which every pair,
/// repeated entries included, is disjointable with index gcd below k.
/// Throws CliqueCapExceeded when more than `cap` exist.
std::vector<Clique> candidate_cliques(std::span<const Subgroup> lattice, int k,
                                      std::size_t cap = 1'000'000);

/// k left cosets a_i G_i, one per tuple entry, that are pairwise disjoint.
struct Violation {
  int k = 0;
  std::vector<Subgroup> subgroups;
  std::vector<std::size_t> lattice_ids;  // empty when searched outside a lattice
  std::vector<Element> reps;             // canonical representatives, tuple order
  std::vector<std::vector<Count>> gcd_matrix;

  /// Re-derives the cosets from the representatives and checks disjointness.
  bool cosets_pairwise_disjoint() const;
  /// Disjoint and every pairwise index gcd below k.
  bool is_counterexample() const;
};

struct SearchStats {
  std::uint64_t coset_placements = 0;
};

/// Backtracking search for pairwise-disjoint cosets, one of each subgroup.
/// The slot with the largest subgroup is pinned to the coset of the identity.
std::optional<Violation> search_disjoint_tuple(std::span<const Subgroup> subgroups,
                                               SearchStats* stats = nullptr);

/// Same search over prebuilt coset spaces (one per tuple slot).
std::optional<Violation> search_disjoint_tuple(std::span<const CosetSpace* const> spaces,
                                               SearchStats* stats = nullptr);

struct VerifyOptions {
  std::size_t clique_cap = 1'000'000;
  unsigned jobs = 1;
};

struct VerificationReport {
  std::string group_label;
  std::size_t group_order = 0;
  int k = 0;
  std::size_t subgroup_count = 0;
  std::size_t candidate_cliques = 0;
  std::uint64_t coset_tuples_examined = 0;
  std::vector<Violation> violations;
  double elapsed_ms = 0.0;
  std::string cache_status = "disabled";

  /// k within the proven range; violations there mean a bug here.
  bool theorem_range() const noexcept { return k <= kProvenMaxK; }
  bool implementation_bug() const noexcept { return theorem_range() && !violations.empty(); }
  bool confirmed() const noexcept { return violations.empty(); }
};

VerificationReport verify_group(const GroupPtr& g, std::span<const Subgroup> lattice, int k,
                                const VerifyOptions& opts = {});

/// Enumerates the lattice itself.
VerificationReport verify_group(const GroupPtr& g, int k, const VerifyOptions& opts = {});

}  // namespace cosetlab
