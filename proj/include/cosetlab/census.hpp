#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cosetlab/subgroup.hpp"

namespace cosetlab {

using Count = std::uint64_t;

/// Overflow-checked 64-bit product; throws Error(Overflow).
Count checked_mul(Count a, Count b);

/// [G : H1 ∩ ... ∩ Hm] normalized by lcm of the individual indices.
struct RValue {
  std::vector<Subgroup> subgroups;
  Count intersection_index = 0;
  Count lcm_index = 0;
  Count r = 0;
};

/// Two or three subgroups of one parent. Integrality of r is checked.
RValue r_value(std::span<const Subgroup> subgroups);

/// Counts over S = G/Gi x G/Gj x G/Gk. Pair slots are ordered (ij, ik, jk);
/// pair-pair slots by pivot (ij∩ik, ij∩jk, ik∩jk).
struct CensusCounts {
  Count total = 0;
  std::array<Count, 3> s_pair{};
  std::array<Count, 3> s_pair_pair{};
  Count meet_all = 0;

  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct TripleCensus {
  std::array<Count, 3> indices{};
  CensusCounts closed_form;
  /// Present unless the enumeration cap was hit.
  std::optional<CensusCounts> enumerated;
  /// Triples whose three pairs all meet; enumeration only.
  std::optional<Count> s_triple;
  /// Pairwise-disjoint triples via inclusion-exclusion on the enumerated counts.
  std::optional<Count> n_disjoint;
  /// Pairwise-disjoint triples counted directly.
  std::optional<Count> n_disjoint_direct;

  bool cap_exceeded() const noexcept { return !enumerated.has_value(); }
  /// Enumeration and closed forms agree, and inclusion-exclusion matches the direct count.
  bool consistent() const noexcept;
};

struct CensusOptions {
  Count enumeration_cap = 1'000'000;
};

TripleCensus census(const Subgroup& gi, const Subgroup& gj, const Subgroup& gk,
                    const CensusOptions& opts = {});

/// d^2 - d(rij + rik + rjk) + (rij rik + rij rjk + rik rjk), the strict upper
/// bound on r_ijk when some triple of cosets is pairwise disjoint and every
/// pairwise index gcd equals d.
std::int64_t triple_strict_upper(std::int64_t d, std::int64_t r_ij, std::int64_t r_ik,
                                 std::int64_t r_jk);

/// triple_strict_upper at d = 3.
std::int64_t rijk_strict_upper(std::int64_t r_ij, std::int64_t r_ik, std::int64_t r_jk);

struct TripleDiagnostics {
  std::array<Count, 3> indices{};             // [G:Gi], [G:Gj], [G:Gk]
  std::array<Count, 3> pair_indices{};        // [G:Gi∩Gj], [G:Gi∩Gk], [G:Gj∩Gk]
  Count triple_index = 0;                     // [G:Gi∩Gj∩Gk]
  std::array<Count, 3> r_pair{};              // r_ij, r_ik, r_jk
  Count r_triple = 0;

  /// Per pivot p with others a,b: [Gp∩Ga : Gp∩Ga∩Gb] and [Gp : Gp∩Gb].
  std::array<Count, 3> sub_index_lhs{};
  std::array<Count, 3> sub_index_rhs{};
  bool index_inequality_ok = true;  // lhs <= rhs at every pivot
  bool divisibility_ok = true;      // [G:Ga∩Gb] | [G:Gi∩Gj∩Gk] for each pair

  /// Common pairwise gcd of the indices, when all three agree.
  std::optional<Count> common_gcd;
  /// Only meaningful with common_gcd: r_ijk <= r_ab r_ac at every pivot, and
  /// r_ab | q_c r_ijk with q_c = [G:Gc] / d.
  bool r_product_ok = true;
  bool r_divisibility_ok = true;

  bool pass() const noexcept {
    return index_inequality_ok && divisibility_ok && r_product_ok && r_divisibility_ok;
  }
};

TripleDiagnostics check_triple_inequalities(const Subgroup& gi, const Subgroup& gj,
                                            const Subgroup& gk);

/// When the census found pairwise-disjoint triples and all pairwise gcds equal d,
/// r_ijk must lie strictly below triple_strict_upper(d, ...). Empty when the
/// premise does not apply.
std::optional<bool> strict_bound_holds(const TripleCensus& c, const TripleDiagnostics& d);

}  // namespace cosetlab
