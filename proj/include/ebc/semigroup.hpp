#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebc/element_set.hpp"

namespace ebc {

/// A finite commutative semigroup given by its Cayley table.
///
/// Elements are the ids 0..order-1; table is row-major, table[a*order+b] = a*b.
/// Construction checks closure only. Associativity and commutativity are
/// checked by check_axioms(), which callers run on untrusted tables.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::size_t order, std::vector<ElementId> table, std::string label);

  std::size_t order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }
  std::span<const ElementId> table() const noexcept { return table_; }
  std::span<const ElementId> row(ElementId a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

  /// Unchecked product.
  ElementId mul(ElementId a, ElementId b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  /// Checked product; throws InputError on out-of-range ids.
  ElementId product(ElementId a, ElementId b) const;

  /// Two-sided identity, if there is one.
  std::optional<ElementId> identity() const;

  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_;
  std::vector<ElementId> table_;
  std::string label_;
};

struct AxiomReport {
  bool associative = true;
  bool commutative = true;
  bool exhaustive = true;          // false when associativity was sampled
  std::uint64_t triples_checked = 0;
};

inline constexpr std::size_t kExhaustiveAxiomOrder = 64;
inline constexpr std::uint64_t kSampledTriples = 100000;

/// Commutativity exhaustively; associativity exhaustively up to order 64 and
/// on kSampledTriples seeded random triples beyond.
AxiomReport check_axioms(const FiniteSemigroup& s, std::uint64_t seed = 0);

/// E(S): all e with e*e = e.
ElementSet idempotent_set(const FiniteSemigroup& s);

struct Subsemigroup {
  FiniteSemigroup semigroup;
  std::vector<ElementId> embedding;  // local id -> id in the parent
};

/// Smallest product-closed subset containing the generators, re-indexed in
/// increasing parent-id order.
Subsemigroup subsemigroup_closure(const FiniteSemigroup& s, const ElementSet& generators);

/// Restriction of s to a subset that must already be product-closed.
Subsemigroup restrict_to(const FiniteSemigroup& s, const ElementSet& closed_subset,
                         std::string label);

/// Componentwise product; pair (i1, i2) has id i1*order(s2)+i2.
FiniteSemigroup direct_product(const FiniteSemigroup& s1, const FiniteSemigroup& s2,
                               std::size_t order_cap = kStructureOrderCap);

/// True iff map is multiplicative and onto t.
bool is_epimorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                    std::span<const ElementId> map);

inline constexpr std::size_t kAutomorphismCap = 8192;

/// Some subgroup of Aut(s) as explicit permutations, identity first. This is
/// all of Aut(s) when it has at most max_size elements and the enumeration
/// stays within an internal work budget. Otherwise it is the pointwise
/// stabilizer of the shortest prefix of a greedy generating set that fits.
/// The worst case is the trivial group.
std::vector<std::vector<ElementId>> automorphism_subgroup(const FiniteSemigroup& s,
                                                          std::size_t max_size = kAutomorphismCap);

// ---- abelian groups -------------------------------------------------------

/// Z_{d1} x ... x Z_{dr} written multiplicatively as a semigroup table. The
/// identity is id 0; element ids use mixed radix with d_r least significant.
FiniteSemigroup abelian_group(std::span<const std::uint64_t> factors,
                              std::size_t order_cap = kStructureOrderCap);

/// True iff s has an identity and every element has an inverse.
bool is_group(const FiniteSemigroup& s);

/// Invariant factors d1 | d2 | ... | dr (all > 1) of a finite abelian group,
/// recovered from the number of elements of each order. Empty for the
/// trivial group. Throws InputError if s is not a commutative group.
std::vector<std::uint64_t> abelian_invariants(const FiniteSemigroup& g);

}  // namespace ebc
