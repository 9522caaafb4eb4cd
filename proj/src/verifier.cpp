#include "cosetlab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "cosetlab/error.hpp"

namespace cosetlab {

std::vector<PairStats> pair_table(std::span<const Subgroup> lattice) {
  std::vector<PairStats> out;
  out.reserve(lattice.size() * (lattice.size() + 1) / 2);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = i; j < lattice.size(); ++j) {
      out.push_back({i, j, std::gcd(Count{lattice[i].index()}, Count{lattice[j].index()}),
                     disjointable(lattice[i], lattice[j])});
    }
  }
  return out;
}

namespace {

void require_k(int k) {
  if (k < kMinK || k > kMaxK) {
    throw Error(ErrorCode::InvalidArgument, "k must be in [2, 6], got " + std::to_string(k));
  }
}

}  // namespace

std::vector<Clique> candidate_cliques(std::span<const Subgroup> lattice, int k, std::size_t cap) {
  require_k(k);
  const std::size_t m = lattice.size();
  std::vector<std::uint8_t> ok(m * m, 0);
  for (const auto& p : pair_table(lattice)) {
    const bool edge = p.disjointable && p.gcd_index < static_cast<Count>(k);
    ok[p.first * m + p.second] = ok[p.second * m + p.first] = edge;
  }

  std::vector<Clique> out;
  Clique current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (current.size() == static_cast<std::size_t>(k)) {
      if (out.size() >= cap) {
        throw Error(ErrorCode::CliqueCapExceeded,
                    "more than " + std::to_string(cap) + " candidate cliques");
      }
      out.push_back(current);
      return;
    }
    for (std::size_t v = from; v < m; ++v) {
      const bool fits = std::all_of(current.begin(), current.end(),
                                    [&](std::size_t u) { return ok[u * m + v]; });
      if (!fits) continue;
      current.push_back(v);
      self(self, v);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

bool Violation::cosets_pairwise_disjoint() const {
  std::vector<LeftCoset> cosets;
  cosets.reserve(subgroups.size());
  for (std::size_t i = 0; i < subgroups.size(); ++i) cosets.push_back(coset_of(reps[i], subgroups[i]));
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (std::size_t j = i + 1; j < cosets.size(); ++j) {
      if (cosets[i].elements().intersects(cosets[j].elements())) return false;
    }
  }
  return true;
}

bool Violation::is_counterexample() const {
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    for (std::size_t j = i + 1; j < subgroups.size(); ++j) {
      if (std::gcd(Count{subgroups[i].index()}, Count{subgroups[j].index()}) >=
          static_cast<Count>(k)) {
        return false;
      }
    }
  }
  return static_cast<std::size_t>(k) == subgroups.size() && cosets_pairwise_disjoint();
}

std::optional<Violation> search_disjoint_tuple(std::span<const CosetSpace* const> spaces,
                                               SearchStats* stats) {
  const std::size_t k = spaces.size();
  if (k == 0) throw Error(ErrorCode::EmptyList, "empty subgroup tuple");

  // Fewest cosets first; stable so equal subgroups stay adjacent in input order.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return spaces[a]->size() < spaces[b]->size();
  });

  const auto& g = spaces[order[0]]->subgroup().group();
  std::vector<std::size_t> chosen(k);
  // Left translation preserves disjointness, so slot 0 may hold the coset of the identity.
  chosen[0] = spaces[order[0]]->index_of(g.identity());

  std::vector<std::uint8_t> same_as_prev(k, 0);
  for (std::size_t s = 1; s < k; ++s) {
    same_as_prev[s] = spaces[order[s]]->subgroup() == spaces[order[s - 1]]->subgroup();
  }

  std::uint64_t placements = 0;
  auto place = [&](auto&& self, std::size_t slot) -> bool {
    if (slot == k) return true;
    const CosetSpace& space = *spaces[order[slot]];
    // Among interchangeable slots only increasing coset numbers are tried;
    // the pinned slot is exempt because its coset is fixed by translation.
    const std::size_t start = (same_as_prev[slot] && slot > 1) ? chosen[slot - 1] + 1 : 0;
    for (std::size_t c = start; c < space.size(); ++c) {
      ++placements;
      const auto& cand = space.coset(c);
      bool clear = true;
      for (std::size_t s = 0; s < slot && clear; ++s) {
        clear = !cand.intersects(spaces[order[s]]->coset(chosen[s]));
      }
      if (!clear) continue;
      chosen[slot] = c;
      if (self(self, slot + 1)) return true;
    }
    return false;
  };
  const bool found = place(place, 1);
  if (stats != nullptr) stats->coset_placements += placements;
  if (!found) return std::nullopt;

  Violation v;
  v.k = static_cast<int>(k);
  v.subgroups.resize(k, spaces[0]->subgroup());
  v.reps.resize(k);
  for (std::size_t s = 0; s < k; ++s) {
    v.subgroups[order[s]] = spaces[order[s]]->subgroup();
    v.reps[order[s]] = spaces[order[s]]->rep(chosen[s]);
  }
  v.gcd_matrix.assign(k, std::vector<Count>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      v.gcd_matrix[i][j] = std::gcd(Count{v.subgroups[i].index()}, Count{v.subgroups[j].index()});
    }
  }
  return v;
}

std::optional<Violation> search_disjoint_tuple(std::span<const Subgroup> subgroups,
                                               SearchStats* stats) {
  if (subgroups.empty()) throw Error(ErrorCode::EmptyList, "empty subgroup tuple");
  std::vector<CosetSpace> spaces;
  spaces.reserve(subgroups.size());
  for (const auto& h : subgroups) {
    require_same_parent(subgroups.front(), h);
    spaces.emplace_back(h);
  }
  std::vector<const CosetSpace*> ptrs;
  for (const auto& s : spaces) ptrs.push_back(&s);
  return search_disjoint_tuple(std::span<const CosetSpace* const>(ptrs), stats);
}

VerificationReport verify_group(const GroupPtr& g, std::span<const Subgroup> lattice, int k,
                                const VerifyOptions& opts) {
  require_k(k);
  const auto t0 = std::chrono::steady_clock::now();

  VerificationReport report;
  report.group_label = g->label();
  report.group_order = g->order();
  report.k = k;
  report.subgroup_count = lattice.size();

  const auto cliques = candidate_cliques(lattice, k, opts.clique_cap);
  report.candidate_cliques = cliques.size();

  // Coset spaces only for lattice entries that appear in some clique.
  std::vector<std::optional<CosetSpace>> spaces(lattice.size());
  for (const auto& c : cliques) {
    for (const auto id : c) {
      if (!spaces[id]) spaces[id].emplace(lattice[id]);
    }
  }

  struct Slot {
    std::optional<Violation> found;
    std::uint64_t placements = 0;
  };
  std::vector<Slot> results(cliques.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<const CosetSpace*> ptrs;
    for (std::size_t i = next++; i < cliques.size(); i = next++) {
      ptrs.clear();
      for (const auto id : cliques[i]) ptrs.push_back(&*spaces[id]);
      SearchStats stats;
      results[i].found = search_disjoint_tuple(std::span<const CosetSpace* const>(ptrs), &stats);
      results[i].placements = stats.coset_placements;
    }
  };
  const unsigned jobs = std::max(1U, opts.jobs);
  if (jobs == 1 || cliques.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  // Merge in clique order so the report does not depend on scheduling.
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    report.coset_tuples_examined += results[i].placements;
    if (auto& v = results[i].found) {
      v->lattice_ids = cliques[i];
      if (!v->is_counterexample()) {
        throw Error(ErrorCode::InvariantViolation, "search returned an invalid witness");
      }
      report.violations.push_back(std::move(*v));
    }
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

VerificationReport verify_group(const GroupPtr& g, int k, const VerifyOptions& opts) {
  const auto lattice = enumerate_subgroups(g);
  return verify_group(g, lattice, k, opts);
}

}  // namespace cosetlab
