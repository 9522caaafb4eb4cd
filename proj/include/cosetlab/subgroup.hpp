#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "cosetlab/element_set.hpp"
#include "cosetlab/group.hpp"

namespace cosetlab {

/// Cheap-to-copy handle on a subgroup of a shared parent group.
class Subgroup {
 public:
  /// Validates identity membership and closure; throws NotASubgroup.
  static Subgroup from_elements(GroupPtr parent, ElementSet elements);
  /// Caller guarantees closure (used for results of generated()).
  static Subgroup trusted(GroupPtr parent, ElementSet elements);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const FiniteGroup& group() const noexcept { return *parent_; }
  const ElementSet& elements() const noexcept { return *elements_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t index() const noexcept { return parent_->order() / order_; }
  bool contains(Element x) const noexcept { return elements_->contains(x); }

  /// Same parent object and same element set.
  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.parent_ == b.parent_ && *a.elements_ == *b.elements_;
  }

 private:
  Subgroup(GroupPtr parent, std::shared_ptr<const ElementSet> elems, std::size_t order)
      : parent_(std::move(parent)), elements_(std::move(elems)), order_(order) {}

  GroupPtr parent_;
  std::shared_ptr<const ElementSet> elements_;
  std::size_t order_ = 0;
};

/// Throws ParentMismatch unless both handles point at the same group object.
void require_same_parent(const Subgroup& a, const Subgroup& b);

/// True iff the set contains the identity and is closed under multiplication.
bool is_closed_subset(const FiniteGroup& g, const ElementSet& s);

/// Subgroup generated by `gens` (the trivial subgroup when empty).
ElementSet generated(const FiniteGroup& g, std::span<const Element> gens);

struct EnumerateOptions {
  std::size_t subgroup_cap = 10'000;
};

/// Every subgroup exactly once, sorted by (order, ascending element sequence).
/// Throws SubgroupCountCapExceeded.
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, const EnumerateOptions& opts = {});

/// Orders subgroups the way enumerate_subgroups() emits them.
bool lattice_less(const Subgroup& a, const Subgroup& b) noexcept;

Subgroup intersect(const Subgroup& h, const Subgroup& k);

}  // namespace cosetlab
