#include "cosetlab/subgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "cosetlab/error.hpp"

namespace cosetlab {

Subgroup Subgroup::from_elements(GroupPtr parent, ElementSet elements) {
  if (elements.universe() != parent->order() || !is_closed_subset(*parent, elements)) {
    throw Error(ErrorCode::NotASubgroup, "element set is not a subgroup of " + parent->label());
  }
  return trusted(std::move(parent), std::move(elements));
}

Subgroup Subgroup::trusted(GroupPtr parent, ElementSet elements) {
  const auto order = elements.count();
  return Subgroup(std::move(parent), std::make_shared<const ElementSet>(std::move(elements)), order);
}

Subgroup Subgroup::whole(GroupPtr parent) {
  auto all = ElementSet::full(parent->order());
  return trusted(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElementSet e(parent->order());
  e.insert(parent->identity());
  return trusted(std::move(parent), std::move(e));
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) {
    throw Error(ErrorCode::ParentMismatch, "subgroups belong to different groups");
  }
}

bool is_closed_subset(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(g.identity())) return false;
  // In a finite group, closure under multiplication implies closure under inverses.
  const auto elems = s.to_vector();
  for (const Element a : elems) {
    for (const Element b : elems) {
      if (!s.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

ElementSet generated(const FiniteGroup& g, std::span<const Element> gens) {
  ElementSet out(g.order());
  out.insert(g.identity());
  std::vector<Element> queue{g.identity()};
  // Right-multiplying by the generators reaches every word in them.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element e = queue[head];
    for (const Element x : gens) {
      const Element y = g.mul(e, x);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

bool lattice_less(const Subgroup& a, const Subgroup& b) noexcept {
  if (a.order() != b.order()) return a.order() < b.order();
  return lex_less(a.elements(), b.elements());
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, const EnumerateOptions& opts) {
  const std::size_t n = g->order();
  struct Found {
    ElementSet elements;
    std::vector<Element> gens;
  };
  std::vector<Found> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;

  auto add = [&](ElementSet s, std::vector<Element> gens) {
    if (seen.contains(s)) return;
    if (found.size() >= opts.subgroup_cap) {
      throw Error(ErrorCode::SubgroupCountCapExceeded,
                  "more than " + std::to_string(opts.subgroup_cap) + " subgroups");
    }
    seen.insert(s);
    found.push_back({std::move(s), std::move(gens)});
  };

  for (Element x = 0; x < n; ++x) {
    const Element gen[] = {x};
    add(generated(*g, gen), {x});
  }

  // Close <H, x> for one x per left coset of H until nothing new appears.
  for (std::size_t i = 0; i < found.size(); ++i) {
    ElementSet covered = found[i].elements;
    if (covered.count() == n) continue;
    for (Element x = 0; x < n; ++x) {
      if (covered.contains(x)) continue;
      // Mark the whole coset xH as covered.
      found[i].elements.for_each([&](Element h) { covered.insert(g->mul(x, h)); });
      std::vector<Element> gens = found[i].gens;
      gens.push_back(x);
      ElementSet s = generated(*g, gens);
      add(std::move(s), std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(Subgroup::trusted(g, std::move(f.elements)));
  std::sort(out.begin(), out.end(), lattice_less);
  return out;
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return Subgroup::trusted(h.parent(), h.elements() & k.elements());
}

}  // namespace cosetlab
