#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ebc/element_set.hpp"
#include "ebc/semigroup.hpp"

namespace ebc {

// The set of products of all nonempty sub-multisets of a sequence.
using ProductSet = ElementSet;

/// P' = P u a*P u {a}.
ProductSet extend(const FiniteSemigroup& s, const ProductSet& p, ElementId a);

/// Product set of the whole sequence (empty sequence -> empty set).
ProductSet product_set(const FiniteSemigroup& s, std::span<const ElementId> seq);

/// True iff no nonempty subsequence of seq has an idempotent product. The
/// empty sequence is vacuously free.
bool is_free(const FiniteSemigroup& s, std::span<const ElementId> seq);

/// |S \ E(S)| + 1, the Gillam-Hall-Williams upper bound on I(S).
std::uint64_t ghw_bound(const FiniteSemigroup& s);

struct SearchConfig {
  /// Longest sequence the search may build; 0 means the GHW bound.
  std::uint32_t depth_budget = 0;
  std::size_t memo_capacity = std::size_t{1} << 22;
  unsigned parallel_width = 1;
};

struct EBResult {
  /// I(S) when exact; otherwise the proven lower bound I(S) >= value.
  std::uint64_t value = 1;
  bool exceeds_budget = false;
  /// Lexicographically smallest longest free sequence in non-decreasing form.
  std::vector<ElementId> extremal_sequence;
  std::uint64_t ghw_bound = 1;
  std::uint64_t nodes_explored = 0;
  std::uint64_t memo_hits = 0;
};

/// Exact Erdos-Burgess constant of a finite commutative semigroup.
///
/// Depth-first branch-and-bound over non-decreasing sequences. The state is
/// the product set plus the smallest admissible next element; states whose
/// product set meets E(S) are never entered. Remaining depth is bounded by
/// the number of non-idempotents that could still join the product set, and
/// a shared memo caches certified upper bounds per state. The result does not
/// depend on parallel_width.
EBResult erdos_burgess(const FiniteSemigroup& s, const SearchConfig& cfg = {});

inline constexpr std::size_t kOracleStateCap = std::size_t{1} << 22;

/// Independent cross-check: level-by-level breadth-first enumeration of
/// reachable (product set, next-minimum) states, no bounds, no memo.
/// Throws ResourceError past state_cap live states.
std::uint64_t erdos_burgess_oracle(const FiniteSemigroup& s,
                                   std::size_t state_cap = kOracleStateCap);

/// D(G) for a finite abelian group, computed as I(G). Throws InputError when
/// g is not a commutative group.
std::uint64_t davenport(const FiniteSemigroup& g, const SearchConfig& cfg = {});

/// Known closed forms of D(G) from invariant factors d1 | ... | dr:
/// 1 + sum(d_i - 1) for p-groups and for rank <= 2. nullopt otherwise.
std::optional<std::uint64_t> davenport_closed_form(std::span<const std::uint64_t> factors);

}  // namespace ebc
