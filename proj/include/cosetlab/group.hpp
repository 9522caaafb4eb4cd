#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cosetlab/element_set.hpp"

namespace cosetlab {

/// Input description of a group. Which fields are meaningful depends on kind.
struct GroupSpec {
  enum class Kind { Cayley, Perm, Named, Product };

  Kind kind = Kind::Named;
  std::size_t order = 0;                          // cayley
  std::vector<std::vector<Element>> table;        // cayley, row-major a*b = table[a][b]
  std::size_t degree = 0;                         // perm
  std::vector<std::vector<Element>> generators;   // perm, one-line image arrays
  std::string name;                               // named
  std::vector<GroupSpec> factors;                 // product

  static GroupSpec named(std::string family);
  static GroupSpec cayley(std::vector<std::vector<Element>> table);
  static GroupSpec perm(std::size_t degree, std::vector<std::vector<Element>> gens);
  static GroupSpec product(std::vector<GroupSpec> factors);
};

struct LoadOptions {
  std::size_t order_cap = 2048;
  /// Associativity is checked on every triple up to this order and sampled above it.
  std::size_t exhaustive_assoc_cap = 256;
  std::uint64_t seed = 0;
};

/// Immutable group given by its full multiplication table over ids 0..n-1.
class FiniteGroup {
 public:
  /// Validates the group axioms; throws Error(NotAGroup) on any violation.
  static FiniteGroup from_table(std::size_t n, std::vector<Element> table, std::string label,
                                const LoadOptions& opts = {});

  std::size_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  const std::string& label() const noexcept { return label_; }

  bool is_abelian() const noexcept;
  std::size_t element_order(Element x) const noexcept;

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Materializes a spec. Perm specs are closed under composition, named
/// families built directly, products componentwise.
GroupPtr load_group(const GroupSpec& spec, const LoadOptions& opts = {});

/// Element (i, j) gets id i*|b| + j.
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, const LoadOptions& opts = {});

/// Permutations compose right to left: (p*q)[x] = p[q[x]].
using Permutation = std::vector<Element>;

/// Closure of the generators under composition, sorted lexicographically
/// (so the identity permutation is id 0). Throws OrderCapExceeded.
std::vector<Permutation> permutation_closure(std::size_t degree,
                                             const std::vector<Permutation>& gens,
                                             std::size_t order_cap);

}  // namespace cosetlab
