#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cosetlab/element_set.hpp"
#include "cosetlab/subgroup.hpp"

namespace cosetlab {

/// A left coset xH, identified by its smallest element.
class LeftCoset {
 public:
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  Element rep() const noexcept { return rep_; }
  const ElementSet& elements() const noexcept { return elements_; }

  friend bool operator==(const LeftCoset& a, const LeftCoset& b) noexcept {
    return a.subgroup_ == b.subgroup_ && a.rep_ == b.rep_;
  }

 private:
  friend LeftCoset coset_of(Element x, const Subgroup& h);
  friend class CosetSpace;
  LeftCoset(Subgroup h, ElementSet elems)
      : subgroup_(std::move(h)), rep_(elems.min()), elements_(std::move(elems)) {}

  Subgroup subgroup_;
  Element rep_ = 0;
  ElementSet elements_;
};

/// xH with its canonical representative. coset_of(x,H) == coset_of(y,H) iff x^-1 y in H.
LeftCoset coset_of(Element x, const Subgroup& h);

/// All left cosets of H, sorted by representative.
std::vector<LeftCoset> left_cosets(const Subgroup& h);

/// G/H laid out for repeated lookups: cosets sorted by rep, plus the coset
/// number of every element.
class CosetSpace {
 public:
  explicit CosetSpace(const Subgroup& h);

  const Subgroup& subgroup() const noexcept { return subgroup_; }
  std::size_t size() const noexcept { return cosets_.size(); }
  const ElementSet& coset(std::size_t i) const noexcept { return cosets_[i]; }
  Element rep(std::size_t i) const noexcept { return reps_[i]; }
  std::size_t index_of(Element x) const noexcept { return coset_index_[x]; }
  LeftCoset left_coset(std::size_t i) const { return LeftCoset(subgroup_, cosets_[i]); }

 private:
  Subgroup subgroup_;
  std::vector<ElementSet> cosets_;
  std::vector<Element> reps_;
  std::vector<std::size_t> coset_index_;
};

/// The set HK = {hk}. Not necessarily a subgroup.
struct ProductSet {
  ElementSet elements;
  Subgroup left_factor;
  Subgroup right_factor;
  bool is_subgroup = false;
};

/// HK, with is_subgroup decided by a closure check and cross-checked against
/// HK == KH. Disagreement throws InvariantViolation.
ProductSet product_set(const Subgroup& h, const Subgroup& k);

/// Raw {hk} without the subgroup decision.
ElementSet product_elements(const Subgroup& h, const Subgroup& k);

/// Throws NotASubgroup when is_subgroup is false.
Subgroup promote(const ProductSet& p);

/// Number of distinct left cosets of K making up HK.
std::size_t cosets_of_k_in_product(const Subgroup& h, const Subgroup& k);

/// True iff some xH and yK are disjoint, decided as |HK| < |G|.
bool disjointable(const Subgroup& h, const Subgroup& k);

/// Intersection of the cosets; when non-empty it is one left coset of the
/// intersection of their subgroups. Throws EmptyList / ParentMismatch.
std::optional<LeftCoset> coset_meet(std::span<const LeftCoset> cosets);

/// Number of left cosets of H that meet K, by direct scan.
std::size_t touching_count(const Subgroup& h, const Subgroup& k);

}  // namespace cosetlab
