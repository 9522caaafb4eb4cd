#include "cosetlab/coset.hpp"

#include "cosetlab/error.hpp"

namespace cosetlab {

namespace {

ElementSet translate(Element x, const Subgroup& h) {
  const auto& g = h.group();
  ElementSet out(g.order());
  h.elements().for_each([&](Element e) { out.insert(g.mul(x, e)); });
  return out;
}

}  // namespace

LeftCoset coset_of(Element x, const Subgroup& h) {
  if (x >= h.group().order()) {
    throw Error(ErrorCode::ParentMismatch, "element " + std::to_string(x) + " not in group");
  }
  return LeftCoset(h, translate(x, h));
}

CosetSpace::CosetSpace(const Subgroup& h)
    : subgroup_(h), coset_index_(h.group().order(), static_cast<std::size_t>(-1)) {
  const auto n = h.group().order();
  cosets_.reserve(h.index());
  reps_.reserve(h.index());
  // Scanning in id order makes each new coset's first element its minimum.
  for (Element x = 0; x < n; ++x) {
    if (coset_index_[x] != static_cast<std::size_t>(-1)) continue;
    auto c = translate(x, h);
    c.for_each([&](Element y) { coset_index_[y] = cosets_.size(); });
    reps_.push_back(x);
    cosets_.push_back(std::move(c));
  }
}

std::vector<LeftCoset> left_cosets(const Subgroup& h) {
  const CosetSpace space(h);
  std::vector<LeftCoset> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.left_coset(i));
  return out;
}

ElementSet product_elements(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const auto& g = h.group();
  ElementSet out(g.order());
  // HK is a union of left cosets of K, one per coset representative of H∩K in H.
  ElementSet done(g.order());
  h.elements().for_each([&](Element a) {
    if (done.contains(a)) return;
    k.elements().for_each([&](Element b) {
      const Element ab = g.mul(a, b);
      out.insert(ab);
      if (h.contains(ab)) done.insert(ab);
    });
  });
  return out;
}

ProductSet product_set(const Subgroup& h, const Subgroup& k) {
  ProductSet p{product_elements(h, k), h, k, false};
  p.is_subgroup = is_closed_subset(h.group(), p.elements);
  const bool permutable = p.elements == product_elements(k, h);
  if (p.is_subgroup != permutable) {
    throw Error(ErrorCode::InvariantViolation, "HK closure and HK == KH disagree");
  }
  return p;
}

Subgroup promote(const ProductSet& p) {
  if (!p.is_subgroup) throw Error(ErrorCode::NotASubgroup, "product set HK is not a subgroup");
  return Subgroup::trusted(p.left_factor.parent(), p.elements);
}

std::size_t cosets_of_k_in_product(const Subgroup& h, const Subgroup& k) {
  const auto hk = product_elements(h, k);
  const CosetSpace space(k);
  std::vector<std::uint8_t> hit(space.size(), 0);
  std::size_t distinct = 0;
  hk.for_each([&](Element x) {
    if (!hit[space.index_of(x)]++) ++distinct;
  });
  return distinct;
}

bool disjointable(const Subgroup& h, const Subgroup& k) {
  // |HK| = |H||K| / |H∩K|, so no product set needs to be built.
  require_same_parent(h, k);
  const auto meet = intersection_count(h.elements(), k.elements());
  return h.order() * k.order() / meet < h.group().order();
}

std::optional<LeftCoset> coset_meet(std::span<const LeftCoset> cosets) {
  if (cosets.empty()) throw Error(ErrorCode::EmptyList, "coset_meet needs at least one coset");
  const auto& first = cosets.front().subgroup();
  ElementSet meet = cosets.front().elements();
  ElementSet common = first.elements();
  for (const auto& c : cosets.subspan(1)) {
    require_same_parent(first, c.subgroup());
    meet &= c.elements();
    common &= c.subgroup().elements();
  }
  if (meet.empty()) return std::nullopt;
  auto h = Subgroup::trusted(first.parent(), std::move(common));
  auto c = coset_of(meet.min(), h);
  if (!(c.elements() == meet)) {
    throw Error(ErrorCode::InvariantViolation, "non-empty coset meet is not a coset of the meet");
  }
  return c;
}

std::size_t touching_count(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const CosetSpace space(h);
  std::size_t touching = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.coset(i).intersects(k.elements())) ++touching;
  }
  return touching;
}

}  // namespace cosetlab
