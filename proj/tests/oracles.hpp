#pragma once

// Brute-force reference implementations for tests. They use only the group
// multiplication table and std::set, never the bitset kernels under test.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "cosetlab/group.hpp"
#include "cosetlab/subgroup.hpp"

namespace oracle {

using cosetlab::Element;
using cosetlab::FiniteGroup;
using Set = std::set<Element>;

inline Set as_set(const cosetlab::Subgroup& h) {
  const auto v = h.elements().to_vector();
  return Set(v.begin(), v.end());
}

/// Repeatedly adds all products until nothing changes.
inline Set close(const FiniteGroup& g, Set s) {
  s.insert(g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (const Element a : cur) {
      for (const Element b : cur) grew |= s.insert(g.mul(a, b)).second;
    }
  }
  return s;
}

/// Every subgroup generated by at most `max_gens` elements.
inline std::set<Set> subgroups_by_subset_closure(const FiniteGroup& g, int max_gens = 3) {
  std::set<Set> out;
  const Element n = static_cast<Element>(g.order());
  std::function<void(Element, Set, int)> rec = [&](Element from, Set gens, int left) {
    out.insert(close(g, gens));
    if (left == 0) return;
    for (Element x = from; x < n; ++x) {
      auto next = gens;
      next.insert(x);
      rec(x + 1, next, left - 1);
    }
  };
  rec(0, {}, max_gens);
  return out;
}

inline Set left_coset(const FiniteGroup& g, Element x, const Set& h) {
  Set out;
  for (const Element e : h) out.insert(g.mul(x, e));
  return out;
}

inline std::vector<Set> all_left_cosets(const FiniteGroup& g, const Set& h) {
  std::set<Set> cs;
  for (Element x = 0; x < g.order(); ++x) cs.insert(left_coset(g, x, h));
  return {cs.begin(), cs.end()};
}

inline Set product(const FiniteGroup& g, const Set& h, const Set& k) {
  Set out;
  for (const Element a : h) {
    for (const Element b : k) out.insert(g.mul(a, b));
  }
  return out;
}

inline bool meets(const Set& a, const Set& b) {
  return std::any_of(a.begin(), a.end(), [&](Element x) { return b.contains(x); });
}

inline Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// Some coset pair xH, yK is disjoint (quadratic scan over all x, y).
inline bool has_disjoint_pair(const FiniteGroup& g, const Set& h, const Set& k) {
  for (const auto& a : all_left_cosets(g, h)) {
    for (const auto& b : all_left_cosets(g, k)) {
      if (!meets(a, b)) return true;
    }
  }
  return false;
}

/// Does any choice of one coset per subgroup give pairwise-disjoint cosets?
inline bool exists_disjoint_family(const FiniteGroup& g, const std::vector<Set>& subgroups) {
  std::vector<std::vector<Set>> spaces;
  for (const auto& h : subgroups) spaces.push_back(all_left_cosets(g, h));
  std::vector<const Set*> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == spaces.size()) return true;
    for (const auto& c : spaces[i]) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](const Set* p) { return meets(*p, c); })) {
        continue;
      }
      chosen.push_back(&c);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

/// Naive census over every coset triple.
struct Census {
  std::uint64_t total = 0, s_ij = 0, s_ik = 0, s_jk = 0;
  std::uint64_t pp_i = 0, pp_j = 0, pp_k = 0, triple = 0, meet_all = 0, disjoint = 0;
};

inline Census census(const FiniteGroup& g, const Set& gi, const Set& gj, const Set& gk) {
  Census c;
  const auto ci = all_left_cosets(g, gi), cj = all_left_cosets(g, gj), ck = all_left_cosets(g, gk);
  for (const auto& a : ci) {
    for (const auto& b : cj) {
      for (const auto& d : ck) {
        const bool ij = meets(a, b), ik = meets(a, d), jk = meets(b, d);
        ++c.total;
        c.s_ij += ij;
        c.s_ik += ik;
        c.s_jk += jk;
        c.pp_i += ij && ik;
        c.pp_j += ij && jk;
        c.pp_k += ik && jk;
        c.triple += ij && ik && jk;
        c.meet_all += !meet(meet(a, b), d).empty();
        c.disjoint += !ij && !ik && !jk;
      }
    }
  }
  return c;
}

/// Plain BFS over permutation words.
inline std::set<std::vector<Element>> perm_closure(const std::vector<std::vector<Element>>& gens,
                                                   std::size_t degree) {
  std::vector<Element> id(degree);
  std::iota(id.begin(), id.end(), Element{0});
  std::set<std::vector<Element>> seen{id};
  std::vector<std::vector<Element>> todo{id};
  while (!todo.empty()) {
    const auto p = todo.back();
    todo.pop_back();
    for (const auto& q : gens) {
      std::vector<Element> r(degree);
      for (std::size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  return seen;
}

}  // namespace oracle
