#include "cosetlab/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>

#include "cosetlab/error.hpp"

namespace cosetlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::SubgroupCountCapExceeded: return "SubgroupCountCapExceeded";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::CliqueCapExceeded: return "CliqueCapExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

GroupSpec GroupSpec::named(std::string family) {
  GroupSpec s;
  s.kind = Kind::Named;
  s.name = std::move(family);
  return s;
}

GroupSpec GroupSpec::cayley(std::vector<std::vector<Element>> table) {
  GroupSpec s;
  s.kind = Kind::Cayley;
  s.order = table.size();
  s.table = std::move(table);
  return s;
}

GroupSpec GroupSpec::perm(std::size_t degree, std::vector<std::vector<Element>> gens) {
  GroupSpec s;
  s.kind = Kind::Perm;
  s.degree = degree;
  s.generators = std::move(gens);
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

namespace {

[[noreturn]] void not_a_group(const std::string& why) { throw Error(ErrorCode::NotAGroup, why); }

bool check_assoc(const std::vector<Element>& t, std::size_t n, Element a, Element b, Element c) {
  return t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Element> table, std::string label,
                                    const LoadOptions& opts) {
  if (n == 0) not_a_group("empty group");
  if (n > opts.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(opts.order_cap));
  }
  if (table.size() != n * n) not_a_group("table is not n x n");
  for (const Element e : table) {
    if (e >= n) not_a_group("table entry out of range");
  }

  // Latin square: every row and column is a permutation.
  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[table[r * n + c]]++) not_a_group("row " + std::to_string(r) + " repeats an entry");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[table[r * n + c]]++) {
        not_a_group("column " + std::to_string(c) + " repeats an entry");
      }
    }
  }

  // Identity need not be 0; locate it by scan.
  Element identity = static_cast<Element>(n);
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table[e * n + x] == x && table[x * n + e] == x;
    }
    if (ok) identity = static_cast<Element>(e);
  }
  if (identity == n) not_a_group("no two-sided identity");

  std::vector<Element> inverse(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto* row = &table[x * n];
    const auto it = std::find(row, row + n, identity);
    const auto y = static_cast<Element>(it - row);
    if (table[y * n + x] != identity) not_a_group("left and right inverses differ");
    inverse[x] = y;
  }

  if (n <= opts.exhaustive_assoc_cap) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (!check_assoc(table, n, a, b, c)) {
            not_a_group("non-associative triple (" + std::to_string(a) + ", " + std::to_string(b) +
                        ", " + std::to_string(c) + ")");
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    const std::size_t samples = 10 * n * n;
    for (std::size_t s = 0; s < samples; ++s) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (!check_assoc(table, n, a, b, c)) not_a_group("non-associative triple (sampled)");
    }
  }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.inverse_ = std::move(inverse);
  g.label_ = std::move(label);
  return g;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Element x) const noexcept {
  std::size_t k = 1;
  for (Element y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

std::vector<Permutation> permutation_closure(std::size_t degree,
                                             const std::vector<Permutation>& gens,
                                             std::size_t order_cap) {
  for (const auto& g : gens) {
    if (g.size() != degree) throw Error(ErrorCode::InvalidSpec, "generator has wrong degree");
    std::vector<std::uint8_t> hit(degree);
    for (const Element x : g) {
      if (x >= degree || hit[x]++) {
        throw Error(ErrorCode::InvalidSpec, "generator is not a permutation");
      }
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), Element{0});

  std::map<Permutation, bool> found{{id, true}};
  std::vector<Permutation> frontier{id};
  Permutation next(degree);
  while (!frontier.empty()) {
    std::vector<Permutation> fresh;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        for (std::size_t x = 0; x < degree; ++x) next[x] = p[g[x]];
        if (found.emplace(next, true).second) {
          if (found.size() > order_cap) {
            throw Error(ErrorCode::OrderCapExceeded,
                        "permutation closure exceeds cap " + std::to_string(order_cap));
          }
          fresh.push_back(next);
        }
      }
    }
    frontier = std::move(fresh);
  }
  std::vector<Permutation> out;
  out.reserve(found.size());
  for (auto& [p, _] : found) out.push_back(p);
  return out;
}

namespace {

GroupPtr group_from_perms(const std::vector<Permutation>& perms, std::string label,
                          const LoadOptions& opts) {
  const std::size_t n = perms.size();
  if (n > opts.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(opts.order_cap));
  }
  std::map<Permutation, Element> id_of;
  for (std::size_t i = 0; i < n; ++i) id_of.emplace(perms[i], static_cast<Element>(i));
  const std::size_t degree = perms.empty() ? 0 : perms.front().size();
  std::vector<Element> table(n * n);
  Permutation prod(degree);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < degree; ++x) prod[x] = perms[a][perms[b][x]];
      const auto it = id_of.find(prod);
      if (it == id_of.end()) not_a_group("permutation set not closed");
      table[a * n + b] = it->second;
    }
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(n, std::move(table), std::move(label), opts));
}

GroupPtr cyclic(std::size_t n, const LoadOptions& opts) {
  if (n == 0) throw Error(ErrorCode::UnknownFamily, "C0");
  if (n > opts.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(opts.order_cap));
  }
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(n, std::move(t), "C" + std::to_string(n), opts));
}

// Order 2n; r^a s^e has id a + n*e, and s r s = r^-1.
GroupPtr dihedral(std::size_t n, const LoadOptions& opts) {
  if (n == 0) throw Error(ErrorCode::UnknownFamily, "D0");
  const std::size_t order = 2 * n;
  if (order > opts.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded, "order " + std::to_string(order) + " exceeds cap " +
                                                 std::to_string(opts.order_cap));
  }
  std::vector<Element> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, e = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y % n, f = y / n;
      const std::size_t rot = e == 0 ? (a + b) % n : (a + n - b) % n;
      t[x * order + y] = static_cast<Element>(rot + n * ((e + f) % 2));
    }
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(order, std::move(t), "D" + std::to_string(n), opts));
}

// Units 1,i,j,k with sign; id = 4*sign + unit.
GroupPtr quaternion(const LoadOptions& opts) {
  // unit product table: (sign, unit) for u*v.
  constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<Element> t(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      const int sign = (x / 4 + y / 4 + kSign[u][v]) % 2;
      t[x * 8 + y] = static_cast<Element>(4 * sign + kUnit[u][v]);
    }
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(8, std::move(t), "Q8", opts));
}

GroupPtr symmetric_or_alternating(std::size_t degree, bool alternating, const LoadOptions& opts) {
  if (degree == 0 || degree > 7) {
    throw Error(ErrorCode::UnknownFamily,
                std::string(alternating ? "A" : "S") + std::to_string(degree) +
                    " (degree must be 1..7)");
  }
  std::vector<Permutation> gens;
  if (alternating) {
    // 3-cycles (0 1 i) generate A_n.
    for (std::size_t i = 2; i < degree; ++i) {
      Permutation p(degree);
      std::iota(p.begin(), p.end(), Element{0});
      p[0] = 1;
      p[1] = static_cast<Element>(i);
      p[i] = 0;
      gens.push_back(std::move(p));
    }
  } else if (degree >= 2) {
    Permutation swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), Element{0});
    std::swap(swap[0], swap[1]);
    for (std::size_t x = 0; x < degree; ++x) cycle[x] = static_cast<Element>((x + 1) % degree);
    gens = {swap, cycle};
  }
  const auto perms = permutation_closure(degree, gens, opts.order_cap);
  return group_from_perms(perms, (alternating ? "A" : "S") + std::to_string(degree), opts);
}

bool parse_count(std::string_view digits, std::size_t& out) {
  if (digits.empty()) return false;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc{} && ptr == digits.data() + digits.size();
}

GroupPtr named_group(const std::string& name, const LoadOptions& opts) {
  if (name == "Q8") return quaternion(opts);
  std::size_t n = 0;
  if (name.size() >= 2 && parse_count(std::string_view(name).substr(1), n)) {
    switch (name[0]) {
      case 'C': return cyclic(n, opts);
      case 'D': return dihedral(n, opts);
      case 'S': return symmetric_or_alternating(n, false, opts);
      case 'A': return symmetric_or_alternating(n, true, opts);
      default: break;
    }
  }
  throw Error(ErrorCode::UnknownFamily, "unknown group family '" + name + "'");
}

}  // namespace

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, const LoadOptions& opts) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > opts.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(opts.order_cap));
  }
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto i = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const auto j = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      t[x * n + y] = static_cast<Element>(i * nb + j);
    }
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(n, std::move(t), a.label() + "x" + b.label(), opts));
}

GroupPtr load_group(const GroupSpec& spec, const LoadOptions& opts) {
  switch (spec.kind) {
    case GroupSpec::Kind::Named:
      return named_group(spec.name, opts);

    case GroupSpec::Kind::Cayley: {
      const std::size_t n = spec.order;
      if (n == 0 || spec.table.size() != n) {
        throw Error(ErrorCode::InvalidSpec, "cayley table must have `order` rows");
      }
      if (n > opts.order_cap) {
        throw Error(ErrorCode::OrderCapExceeded, "order " + std::to_string(n) + " exceeds cap " +
                                                     std::to_string(opts.order_cap));
      }
      std::vector<Element> flat;
      flat.reserve(n * n);
      for (const auto& row : spec.table) {
        if (row.size() != n) throw Error(ErrorCode::InvalidSpec, "cayley row has wrong length");
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return std::make_shared<const FiniteGroup>(
          FiniteGroup::from_table(n, std::move(flat), "cayley(" + std::to_string(n) + ")", opts));
    }

    case GroupSpec::Kind::Perm: {
      if (spec.degree == 0) throw Error(ErrorCode::InvalidSpec, "perm degree must be positive");
      const auto perms = permutation_closure(spec.degree, spec.generators, opts.order_cap);
      return group_from_perms(perms, "perm(" + std::to_string(spec.degree) + ")", opts);
    }

    case GroupSpec::Kind::Product: {
      if (spec.factors.size() < 2) {
        throw Error(ErrorCode::InvalidSpec, "product needs at least two factors");
      }
      GroupPtr acc = load_group(spec.factors.front(), opts);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        acc = direct_product(*acc, *load_group(spec.factors[i], opts), opts);
      }
      return acc;
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown spec kind");
}

}  // namespace cosetlab
