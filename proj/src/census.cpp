#include "cosetlab/census.hpp"

#include <numeric>

#include "cosetlab/coset.hpp"
#include "cosetlab/error.hpp"

namespace cosetlab {

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "64-bit count overflow");
  }
  return out;
}

namespace {

Count exact_div(Count num, Count den) {
  if (den == 0 || num % den != 0) {
    throw Error(ErrorCode::InvariantViolation,
                std::to_string(num) + " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

Count intersection_index(std::span<const Subgroup> hs) {
  ElementSet meet = hs.front().elements();
  for (const auto& h : hs.subspan(1)) {
    require_same_parent(hs.front(), h);
    meet &= h.elements();
  }
  return hs.front().group().order() / meet.count();
}

}  // namespace

RValue r_value(std::span<const Subgroup> subgroups) {
  if (subgroups.size() < 2 || subgroups.size() > 3) {
    throw Error(ErrorCode::InvalidArgument, "r_value takes two or three subgroups");
  }
  RValue out;
  out.subgroups.assign(subgroups.begin(), subgroups.end());
  out.intersection_index = intersection_index(subgroups);
  out.lcm_index = 1;
  for (const auto& h : subgroups) out.lcm_index = std::lcm(out.lcm_index, Count{h.index()});
  out.r = exact_div(out.intersection_index, out.lcm_index);
  return out;
}

bool TripleCensus::consistent() const noexcept {
  if (!enumerated) return true;
  return *enumerated == closed_form && s_triple >= enumerated->meet_all &&
         n_disjoint == n_disjoint_direct;
}

TripleCensus census(const Subgroup& gi, const Subgroup& gj, const Subgroup& gk,
                    const CensusOptions& opts) {
  require_same_parent(gi, gj);
  require_same_parent(gi, gk);

  TripleCensus out;
  const Count ii = gi.index(), ij = gj.index(), ik = gk.index();
  out.indices = {ii, ij, ik};

  const auto gij = intersect(gi, gj), gik = intersect(gi, gk), gjk = intersect(gj, gk);
  const Count x_ij = gij.index(), x_ik = gik.index(), x_jk = gjk.index();
  const Count x_ijk = intersect(gij, gk).index();

  auto& cf = out.closed_form;
  cf.total = checked_mul(checked_mul(ii, ij), ik);
  cf.s_pair = {checked_mul(x_ij, ik), checked_mul(x_ik, ij), checked_mul(x_jk, ii)};
  cf.s_pair_pair = {exact_div(checked_mul(x_ij, x_ik), ii), exact_div(checked_mul(x_ij, x_jk), ij),
                    exact_div(checked_mul(x_ik, x_jk), ik)};
  cf.meet_all = x_ijk;

  if (cf.total > opts.enumeration_cap) return out;

  const CosetSpace si(gi), sj(gj), sk(gk);
  auto meet_table = [](const CosetSpace& a, const CosetSpace& b) {
    std::vector<std::uint8_t> m(a.size() * b.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        m[x * b.size() + y] = a.coset(x).intersects(b.coset(y));
      }
    }
    return m;
  };
  const auto m_ij = meet_table(si, sj), m_ik = meet_table(si, sk), m_jk = meet_table(sj, sk);

  CensusCounts e;
  e.total = Count{si.size()} * sj.size() * sk.size();
  Count triple = 0, disjoint = 0;
  std::vector<std::uint8_t> touched(sk.size());
  for (std::size_t a = 0; a < si.size(); ++a) {
    for (std::size_t b = 0; b < sj.size(); ++b) {
      const bool mij = m_ij[a * sj.size() + b];
      if (mij) {
        // Which Gk-cosets does Ci ∩ Cj reach?
        std::fill(touched.begin(), touched.end(), 0);
        (si.coset(a) & sj.coset(b)).for_each([&](Element x) { touched[sk.index_of(x)] = 1; });
      }
      for (std::size_t c = 0; c < sk.size(); ++c) {
        const bool mik = m_ik[a * sk.size() + c];
        const bool mjk = m_jk[b * sk.size() + c];
        e.s_pair[0] += mij;
        e.s_pair[1] += mik;
        e.s_pair[2] += mjk;
        e.s_pair_pair[0] += mij && mik;
        e.s_pair_pair[1] += mij && mjk;
        e.s_pair_pair[2] += mik && mjk;
        triple += mij && mik && mjk;
        e.meet_all += mij && touched[c];
        disjoint += !mij && !mik && !mjk;
      }
    }
  }

  out.enumerated = e;
  out.s_triple = triple;
  out.n_disjoint = e.total - (e.s_pair[0] + e.s_pair[1] + e.s_pair[2]) +
                   (e.s_pair_pair[0] + e.s_pair_pair[1] + e.s_pair_pair[2]) - triple;
  out.n_disjoint_direct = disjoint;
  return out;
}

std::int64_t triple_strict_upper(std::int64_t d, std::int64_t r_ij, std::int64_t r_ik,
                                 std::int64_t r_jk) {
  return d * d - d * (r_ij + r_ik + r_jk) + (r_ij * r_ik + r_ij * r_jk + r_ik * r_jk);
}

std::int64_t rijk_strict_upper(std::int64_t r_ij, std::int64_t r_ik, std::int64_t r_jk) {
  return triple_strict_upper(3, r_ij, r_ik, r_jk);
}

TripleDiagnostics check_triple_inequalities(const Subgroup& gi, const Subgroup& gj,
                                            const Subgroup& gk) {
  require_same_parent(gi, gj);
  require_same_parent(gi, gk);
  const std::array<const Subgroup*, 3> g = {&gi, &gj, &gk};
  // Pair slot p in {ij, ik, jk}; kPairOf[a][b] maps two positions to that slot.
  constexpr std::size_t kPairOf[3][3] = {{9, 0, 1}, {0, 9, 2}, {1, 2, 9}};
  constexpr std::array<std::array<std::size_t, 2>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};

  TripleDiagnostics d;
  std::array<Subgroup, 3> pair_meet = {intersect(gi, gj), intersect(gi, gk), intersect(gj, gk)};
  const auto all = intersect(pair_meet[0], gk);
  for (std::size_t s = 0; s < 3; ++s) {
    d.indices[s] = g[s]->index();
    d.pair_indices[s] = pair_meet[s].index();
  }
  d.triple_index = all.index();
  for (std::size_t s = 0; s < 3; ++s) {
    const auto [a, b] = kPairs[s];
    d.r_pair[s] = exact_div(d.pair_indices[s], std::lcm(d.indices[a], d.indices[b]));
    d.divisibility_ok = d.divisibility_ok && d.triple_index % d.pair_indices[s] == 0;
  }
  d.r_triple = exact_div(
      d.triple_index, std::lcm(std::lcm(d.indices[0], d.indices[1]), d.indices[2]));

  for (std::size_t p = 0; p < 3; ++p) {
    const std::size_t a = (p + 1) % 3, b = (p + 2) % 3;
    const auto& pa = pair_meet[kPairOf[p][a]];
    const auto& pb = pair_meet[kPairOf[p][b]];
    d.sub_index_lhs[p] = pa.order() / all.order();
    d.sub_index_rhs[p] = g[p]->order() / pb.order();
    d.index_inequality_ok = d.index_inequality_ok && d.sub_index_lhs[p] <= d.sub_index_rhs[p];
  }

  const Count g01 = std::gcd(d.indices[0], d.indices[1]);
  const Count g02 = std::gcd(d.indices[0], d.indices[2]);
  const Count g12 = std::gcd(d.indices[1], d.indices[2]);
  if (g01 == g02 && g02 == g12) {
    d.common_gcd = g01;
    for (std::size_t p = 0; p < 3; ++p) {
      const std::size_t a = (p + 1) % 3, b = (p + 2) % 3;
      d.r_product_ok = d.r_product_ok &&
                       d.r_triple <= d.r_pair[kPairOf[p][a]] * d.r_pair[kPairOf[p][b]];
    }
    for (std::size_t s = 0; s < 3; ++s) {
      const std::size_t c = 3 - kPairs[s][0] - kPairs[s][1];
      const Count q_c = d.indices[c] / g01;
      d.r_divisibility_ok = d.r_divisibility_ok && (q_c * d.r_triple) % d.r_pair[s] == 0;
    }
  }
  return d;
}

std::optional<bool> strict_bound_holds(const TripleCensus& c, const TripleDiagnostics& d) {
  if (!d.common_gcd || !c.n_disjoint || *c.n_disjoint == 0) return std::nullopt;
  const auto bound = triple_strict_upper(static_cast<std::int64_t>(*d.common_gcd),
                                         static_cast<std::int64_t>(d.r_pair[0]),
                                         static_cast<std::int64_t>(d.r_pair[1]),
                                         static_cast<std::int64_t>(d.r_pair[2]));
  return static_cast<std::int64_t>(d.r_triple) < bound;
}

}  // namespace cosetlab
