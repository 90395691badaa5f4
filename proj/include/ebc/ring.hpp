#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebc/element_set.hpp"
#include "ebc/semigroup.hpp"

namespace ebc {

/// Finite commutative unitary ring given by addition and multiplication
/// tables over element ids 0..order-1.
class FiniteRing {
 public:
  FiniteRing(std::size_t order, std::vector<ElementId> add, std::vector<ElementId> mul,
             ElementId zero, ElementId one, std::string label);

  std::size_t order() const noexcept { return order_; }
  ElementId zero() const noexcept { return zero_; }
  ElementId one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  ElementId add(ElementId a, ElementId b) const noexcept { return add_[a * order_ + b]; }
  ElementId mul(ElementId a, ElementId b) const noexcept { return mul_[a * order_ + b]; }
  ElementId neg(ElementId a) const noexcept { return neg_[a]; }
  ElementId sub(ElementId a, ElementId b) const noexcept { return add(a, neg(b)); }

  std::span<const ElementId> add_table() const noexcept { return add_; }
  std::span<const ElementId> mul_table() const noexcept { return mul_; }

  /// n * one, for any integer n (negative allowed).
  ElementId from_integer(std::int64_t n) const;

 private:
  std::size_t order_;
  std::vector<ElementId> add_;
  std::vector<ElementId> mul_;
  std::vector<ElementId> neg_;
  ElementId zero_;
  ElementId one_;
  std::string label_;
};

struct RingAxiomReport {
  bool additive_group = true;    // associative, commutative, identity, inverses
  bool multiplicative_monoid = true;  // associative, commutative, identity
  bool distributive = true;
  bool exhaustive = true;

  bool ok() const { return additive_group && multiplicative_monoid && distributive; }
};

/// Exhaustive up to order 64, seeded sampling of triples beyond.
RingAxiomReport check_ring_axioms(const FiniteRing& r, std::uint64_t seed = 0);

/// Builds a ring from raw tables, deriving zero and one, and rejects tables
/// that fail check_ring_axioms.
FiniteRing ring_from_tables(std::size_t order, std::vector<ElementId> add,
                            std::vector<ElementId> mul, std::string label,
                            std::uint64_t seed = 0);

// ---- constructors ---------------------------------------------------------

FiniteRing make_zmod(std::uint64_t n, std::size_t order_cap = kStructureOrderCap);

/// GF(p^k) as Z/p[x] modulo the smallest monic irreducible of degree k, where
/// polynomials compare by coefficient vector, constant term first. Element id
/// is sum c_i p^i.
FiniteRing make_gf(std::uint64_t p, std::uint64_t k, std::size_t order_cap = kStructureOrderCap);

/// Coefficients (constant term first) of the modulus make_gf uses.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, std::uint64_t k);

/// F_2^k with element id bits as coordinates.
FiniteRing make_boolean(std::uint64_t k, std::size_t order_cap = kStructureOrderCap);

inline constexpr std::size_t kPolyBaseOrderCap = 16;

/// base[x] / (modulus). Coefficients are base element ids, constant first;
/// the last must be base.one(). Element id is sum c_i |base|^i.
FiniteRing make_quotient_poly(const FiniteRing& base, std::span<const ElementId> modulus,
                              std::size_t order_cap = kStructureOrderCap);

/// Componentwise ring; pair (i1, i2) has id i1*order(r2)+i2.
FiniteRing ring_product(const FiniteRing& r1, const FiniteRing& r2,
                        std::size_t order_cap = kStructureOrderCap);

/// Shares element ids with r.
FiniteSemigroup mult_semigroup(const FiniteRing& r);

// ---- ideals and structure -------------------------------------------------

/// A subset verified to be an ideal of its ring.
class Ideal {
 public:
  /// Throws InputError unless elements is an ideal of r.
  static Ideal verified(const FiniteRing& r, ElementSet elements);

  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  explicit Ideal(ElementSet e) : elements_(std::move(e)) {}
  friend Ideal trusted_ideal(ElementSet);

  ElementSet elements_;
};

bool is_ideal(const FiniteRing& r, const ElementSet& s);

/// Smallest ideal containing the given elements.
Ideal ideal_generated(const FiniteRing& r, std::span<const ElementId> generators);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const FiniteRing& r, const Ideal& a, const Ideal& b);

struct MaximalIdeal {
  Ideal ideal;
  std::uint64_t index;                // [R:M] = |R/M|
  ElementId primitive_idempotent;     // the local factor this ideal comes from
};

ElementSet units(const FiniteRing& r);

/// All nilpotent elements.
Ideal nilradical(const FiniteRing& r);

/// Minimal nonzero idempotents, increasing id.
std::vector<ElementId> primitive_idempotents(const FiniteRing& r);

/// Every maximal ideal, via the local factors R*e of the primitive
/// idempotents e: M = {x : x*e is not a unit of R*e}. Sorted by index, then
/// by element list. Throws InputError on the zero ring.
std::vector<MaximalIdeal> maximal_ideals(const FiniteRing& r);

/// J(R) = {x : 1 + r*x is a unit for every r}. Throws InputError on the zero
/// ring.
Ideal jacobson_radical(const FiniteRing& r);

/// Intersection of the given maximal ideals (or of all of them).
Ideal intersection_of(const FiniteRing& r, std::span<const MaximalIdeal> ideals);

struct Quotient {
  FiniteRing ring;
  std::vector<ElementId> projection;  // id in r -> coset id
};

/// R/I with each coset represented by its smallest element; coset ids follow
/// the order of those representatives.
Quotient quotient_ring(const FiniteRing& r, const Ideal& i);

bool is_boolean(const FiniteRing& r);

struct FieldDescriptor {
  std::uint64_t characteristic;
  std::uint64_t degree;
  std::uint64_t order() const;
  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// Fields R*e over the primitive idempotents when J(R) = 0, sorted by
/// (characteristic, degree); nullopt when J(R) != 0.
std::optional<std::vector<FieldDescriptor>> semisimple_decomposition(const FiniteRing& r);

struct ResidueTarget {
  std::size_t ideal;         // position in CRTCertificate::ideals_used
  std::uint64_t index;       // [R:M_i]
  ElementId representative;  // b_i: smallest id that is a non-idempotent unit mod M_i
};

struct CRTCertificate {
  std::vector<ElementId> sequence;
  std::vector<MaximalIdeal> ideals_used;  // every maximal ideal of index > 2
  std::vector<ResidueTarget> residues;
  bool verified_free = false;
  std::uint64_t lower_bound = 1;  // I(S_R) >= t + 1 when verified
};

/// For each maximal ideal M_i of index > 2, a_i = b_i*e_i + (1 - e_i) where
/// e_i is M_i's primitive idempotent: a_i = b_i mod M_i and a_i = 1 mod every
/// other maximal ideal. The sequence is checked for freeness.
CRTCertificate claim_b_sequence(const FiniteRing& r);

struct StructureReport {
  ElementSet idempotents;
  ElementSet units;
  Ideal jacobson_radical;
  Ideal nilradical;
  std::vector<MaximalIdeal> maximal_ideals;
  std::size_t index_two_count = 0;
  std::size_t index_gt_two_count = 0;
  bool boolean = false;
  std::optional<std::vector<FieldDescriptor>> semisimple_factors;
};

/// Full structural analysis. Throws InternalError if the independently
/// computed radicals disagree. Throws InputError on the zero ring.
StructureReport analyze(const FiniteRing& r);

}  // namespace ebc
