#include "cosetlab/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cosetlab/coset.hpp"
#include "cosetlab/error.hpp"

namespace cosetlab {

void LemmaTally::record(bool ok, const std::string& context) {
  ++checked;
  if (ok) {
    ++passed;
  } else {
    ++failed;
    if (!first_failure) first_failure = context;
  }
}

const LemmaTally& LemmaSuiteResult::tally(std::string_view id) const {
  for (const auto& t : tallies) {
    if (t.id == id) return t;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown lemma id " + std::string(id));
}

bool LemmaSuiteResult::all_passed() const noexcept {
  return std::all_of(tallies.begin(), tallies.end(), [](const auto& t) { return t.failed == 0; });
}

bool disjoint_pair_by_scan(const Subgroup& h, const Subgroup& k) {
  const CosetSpace sh(h), sk(k);
  for (std::size_t x = 0; x < sh.size(); ++x) {
    for (std::size_t y = 0; y < sk.size(); ++y) {
      if (!sh.coset(x).intersects(sk.coset(y))) return true;
    }
  }
  return false;
}

namespace {

enum LemmaSlot : std::size_t { Li, Lii, Liii, Liv, Lv, L32, L33, R31, E31, E32, E34 };

std::string ctx(std::initializer_list<std::size_t> ids) {
  std::string s = "subgroups(";
  bool first = true;
  for (const auto id : ids) {
    if (!first) s += ",";
    s += std::to_string(id);
    first = false;
  }
  return s + ")";
}

class Suite {
 public:
  Suite(const GroupPtr& g, std::span<const Subgroup> lattice, const LemmaSuiteOptions& opts)
      : g_(g), lattice_(lattice), opts_(opts) {
    spaces_.reserve(lattice.size());
    for (const auto& h : lattice) spaces_.emplace_back(h);
    for (const auto id : kLemmaIds) result_.tallies.emplace_back().id = id;
    result_.seed = opts.seed;
    result_.subgroup_count = lattice.size();
  }

  LemmaSuiteResult run() {
    if (g_->order() <= opts_.exhaustive_order_cap) {
      exhaustive();
    } else {
      sampled();
    }
    return std::move(result_);
  }

 private:
  LemmaTally& t(LemmaSlot s) { return result_.tallies[s]; }

  // --- pair facts -------------------------------------------------------

  void check_pair(std::size_t a, std::size_t b, std::uint32_t mask) {
    const auto& h = lattice_[a];
    const auto& k = lattice_[b];
    const auto c = ctx({a, b});
    const auto hk = product_elements(h, k);
    const auto meet = intersect(h, k);
    const bool permutable = hk == product_elements(k, h);

    if (mask & (1U << Li)) t(Li).record(is_closed_subset(*g_, hk) == permutable, c);
    if (mask & (1U << Lii)) {
      t(Lii).record(cosets_of_k_in_product(h, k) == h.order() / meet.order() &&
                        hk.count() == h.order() * k.order() / meet.order(),
                    c);
    }
    if ((mask & (1U << Liii)) && std::gcd(h.index(), k.index()) == 1) {
      t(Liii).record(hk.count() == g_->order(), c);
    }
    if (mask & (1U << Liv)) t(Liv).record(disjointable(h, k) == disjoint_pair_by_scan(h, k), c);
    if ((mask & (1U << Lv)) && permutable) t(Lv).record(product_disjointness(a, b, hk), c);
    if (mask & (1U << L33)) t(L33).record(touching_count(h, k) == k.order() / meet.order(), c);
  }

  // xH ∩ yK = ∅ implies xHK ∩ yHK = ∅, over every coset pair.
  bool product_disjointness(std::size_t a, std::size_t b, const ElementSet& hk) {
    const auto hk_group = Subgroup::trusted(g_, hk);
    const auto& sh = spaces_[a];
    const auto& sk = spaces_[b];
    for (std::size_t x = 0; x < sh.size(); ++x) {
      for (std::size_t y = 0; y < sk.size(); ++y) {
        if (sh.coset(x).intersects(sk.coset(y))) continue;
        const LeftCoset pair[] = {coset_of(sh.rep(x), hk_group), coset_of(sk.rep(y), hk_group)};
        if (coset_meet(pair).has_value()) return false;
      }
    }
    return true;
  }

  // --- coset-tuple meets ------------------------------------------------

  // Count of coset tuples with non-empty meet equals [G : ∩H], and each
  // non-empty meet has exactly |∩H| elements.
  void check_meet_count(std::span<const std::size_t> ids) {
    ElementSet common = lattice_[ids[0]].elements();
    for (const auto id : ids.subspan(1)) common &= lattice_[id].elements();
    const std::size_t meet_order = common.count();
    const std::size_t expected = g_->order() / meet_order;

    std::size_t nonempty = 0;
    bool sizes_ok = true;
    const auto& s0 = spaces_[ids[0]];
    if (ids.size() == 1) {
      nonempty = s0.size();
    } else if (ids.size() == 2) {
      const auto& s1 = spaces_[ids[1]];
      for (std::size_t x = 0; x < s0.size(); ++x) {
        for (std::size_t y = 0; y < s1.size(); ++y) {
          const auto c = intersection_count(s0.coset(x), s1.coset(y));
          if (c == 0) continue;
          ++nonempty;
          sizes_ok = sizes_ok && c == meet_order;
        }
      }
    } else {
      const auto& s1 = spaces_[ids[1]];
      const auto& s2 = spaces_[ids[2]];
      for (std::size_t x = 0; x < s0.size(); ++x) {
        for (std::size_t y = 0; y < s1.size(); ++y) {
          if (!s0.coset(x).intersects(s1.coset(y))) continue;
          for (std::size_t z = 0; z < s2.size(); ++z) {
            const auto c = intersection_count3(s0.coset(x), s1.coset(y), s2.coset(z));
            if (c == 0) continue;
            ++nonempty;
            sizes_ok = sizes_ok && c == meet_order;
          }
        }
      }
    }
    std::string c = "subgroups(";
    for (std::size_t i = 0; i < ids.size(); ++i) c += (i ? "," : "") + std::to_string(ids[i]);
    t(L32).record(nonempty == expected && sizes_ok, c + ")");
  }

  // --- triple facts -----------------------------------------------------

  void check_triple(std::size_t a, std::size_t b, std::size_t c) {
    const auto& gi = lattice_[a];
    const auto& gj = lattice_[b];
    const auto& gk = lattice_[c];
    const auto where = ctx({a, b, c});
    const auto diag = check_triple_inequalities(gi, gj, gk);
    t(E31).record(diag.index_inequality_ok && diag.r_product_ok, where);
    t(E34).record(diag.divisibility_ok && diag.r_divisibility_ok, where);

    const auto cen = census(gi, gj, gk, CensusOptions{opts_.census_cap});
    if (cen.cap_exceeded()) return;
    const auto bound = strict_bound_holds(cen, diag);
    t(E32).record(cen.consistent() && bound.value_or(true), where);
  }

  // --- nested pairs -----------------------------------------------------

  /// Lattice positions S with lower <= S <= upper.
  std::vector<std::size_t> between(const ElementSet& lower, const ElementSet& upper) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < lattice_.size(); ++s) {
      const auto& e = lattice_[s].elements();
      if (lower.is_subset_of(e) && e.is_subset_of(upper)) out.push_back(s);
    }
    return out;
  }

  // For a in G and b in aG1 with aH1 != bH1: aH1 ∩ bH2 = ∅.
  bool nested_disjoint(std::size_t h1, std::size_t h2, Element a, Element b) {
    const auto& s1 = spaces_[h1];
    const auto& s2 = spaces_[h2];
    return !s1.coset(s1.index_of(a)).intersects(s2.coset(s2.index_of(b)));
  }

  void check_remark_all(std::size_t g1, std::size_t g2, std::size_t h1, std::size_t h2) {
    const auto where = ctx({g1, g2, h1, h2});
    const auto& outer = lattice_[g1].elements();
    const bool premise =
        (lattice_[h1].elements() & lattice_[h2].elements()) == (outer & lattice_[g2].elements());
    if (!premise) {
      t(R31).record(false, where + " premise");
      return;
    }
    if (h1 == g1) return;  // no second H1-coset inside a G1-coset
    const auto& s1 = spaces_[h1];
    bool ok = true;
    for (Element a = 0; a < g_->order() && ok; ++a) {
      const auto a_coset = s1.index_of(a);
      outer.for_each([&](Element u) {
        const Element b = g_->mul(a, u);  // b ranges over aG1
        if (s1.index_of(b) == a_coset) return;
        ok = ok && nested_disjoint(h1, h2, a, b);
      });
    }
    t(R31).record(ok, where);
  }

  // --- tiers ------------------------------------------------------------

  void exhaustive() {
    result_.tier = "exhaustive";
    const std::size_t m = lattice_.size();
    constexpr std::uint32_t kAllPair =
        (1U << Li) | (1U << Lii) | (1U << Liii) | (1U << Liv) | (1U << Lv) | (1U << L33);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        check_pair(a, b, kAllPair);
        ++result_.pair_count;
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      const std::size_t one[] = {a};
      check_meet_count(one);
      for (std::size_t b = a; b < m; ++b) {
        const std::size_t two[] = {a, b};
        check_meet_count(two);
        for (std::size_t c = b; c < m; ++c) {
          const std::size_t three[] = {a, b, c};
          check_meet_count(three);
          check_triple(a, b, c);
          ++result_.triple_count;
        }
      }
    }
    for (std::size_t g1 = 0; g1 < m; ++g1) {
      for (std::size_t g2 = 0; g2 < m; ++g2) {
        const auto lower = lattice_[g1].elements() & lattice_[g2].elements();
        const auto inner1 = between(lower, lattice_[g1].elements());
        const auto inner2 = between(lower, lattice_[g2].elements());
        for (const auto h1 : inner1) {
          for (const auto h2 : inner2) check_remark_all(g1, g2, h1, h2);
        }
      }
    }
  }

  void sampled() {
    result_.tier = "sampled";
    std::mt19937_64 rng(opts_.seed);
    const std::size_t m = lattice_.size();
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    std::uniform_int_distribution<Element> elem(0, static_cast<Element>(g_->order() - 1));
    const std::uint64_t target = opts_.samples;
    const std::uint64_t max_draws = 200 * target;

    // Each pair lemma is drawn until it has `target` applicable checks.
    for (const LemmaSlot s : {Li, Lii, Liii, Liv, Lv, L33}) {
      for (std::uint64_t draw = 0; draw < max_draws && t(s).checked < target; ++draw) {
        check_pair(pick(rng), pick(rng), 1U << s);
      }
    }

    std::uniform_int_distribution<int> arity(1, 3);
    for (std::uint64_t i = 0; i < target; ++i) {
      std::vector<std::size_t> ids(static_cast<std::size_t>(arity(rng)));
      for (auto& id : ids) id = pick(rng);
      check_meet_count(ids);
    }

    for (std::uint64_t draw = 0; draw < max_draws && t(E31).checked < target; ++draw) {
      check_triple(pick(rng), pick(rng), pick(rng));
    }

    for (std::uint64_t draw = 0; draw < max_draws && t(R31).checked < target; ++draw) {
      const std::size_t g1 = pick(rng), g2 = pick(rng);
      const auto lower = lattice_[g1].elements() & lattice_[g2].elements();
      const auto inner1 = between(lower, lattice_[g1].elements());
      const auto inner2 = between(lower, lattice_[g2].elements());
      const auto h1 = inner1[std::uniform_int_distribution<std::size_t>(0, inner1.size() - 1)(rng)];
      const auto h2 = inner2[std::uniform_int_distribution<std::size_t>(0, inner2.size() - 1)(rng)];
      if (h1 == g1) continue;
      const Element a = elem(rng);
      // b = a*u with u in G1 \ H1, so aH1 != bH1 while b stays in aG1.
      std::vector<Element> outside;
      lattice_[g1].elements().for_each([&](Element u) {
        if (!lattice_[h1].contains(u)) outside.push_back(u);
      });
      const Element u =
          outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
      const auto where = ctx({g1, g2, h1, h2}) + " a=" + std::to_string(a) + " u=" +
                         std::to_string(u);
      const bool premise =
          (lattice_[h1].elements() & lattice_[h2].elements()) == lower;
      t(R31).record(premise && nested_disjoint(h1, h2, a, g_->mul(a, u)), where);
    }
  }

  GroupPtr g_;
  std::span<const Subgroup> lattice_;
  LemmaSuiteOptions opts_;
  std::vector<CosetSpace> spaces_;
  LemmaSuiteResult result_;
};

}  // namespace

LemmaSuiteResult run_lemma_suite(const GroupPtr& g, std::span<const Subgroup> lattice,
                                 const LemmaSuiteOptions& opts) {
  if (lattice.empty()) throw Error(ErrorCode::EmptyList, "empty subgroup lattice");
  return Suite(g, lattice, opts).run();
}

}  // namespace cosetlab
