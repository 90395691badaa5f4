#include "ebc/semigroup.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "ebc/errors.hpp"

namespace ebc {

FiniteSemigroup::FiniteSemigroup(std::size_t order, std::vector<ElementId> table,
                                 std::string label)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
  if (order_ == 0) throw InputError("semigroup must be nonempty");
  if (table_.size() != order_ * order_) {
    throw InputError("Cayley table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(order_ * order_));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= order_) {
      throw InputError("Cayley table entry (" + std::to_string(i / order_) + "," +
                       std::to_string(i % order_) + ") = " + std::to_string(table_[i]) +
                       " is outside [0," + std::to_string(order_) + ")");
    }
  }
}

ElementId FiniteSemigroup::product(ElementId a, ElementId b) const {
  if (a >= order_ || b >= order_) {
    throw InputError("element id out of range: product(" + std::to_string(a) + "," +
                     std::to_string(b) + ") in semigroup of order " + std::to_string(order_));
  }
  return mul(a, b);
}

std::optional<ElementId> FiniteSemigroup::identity() const {
  for (ElementId e = 0; e < order_; ++e) {
    bool ok = true;
    for (ElementId x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

AxiomReport check_axioms(const FiniteSemigroup& s, std::uint64_t seed) {
  AxiomReport report;
  const auto n = static_cast<ElementId>(s.order());
  for (ElementId a = 0; a < n && report.commutative; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (s.mul(a, b) != s.mul(b, a)) {
        report.commutative = false;
        break;
      }
    }
  }
  auto assoc = [&](ElementId a, ElementId b, ElementId c) {
    ++report.triples_checked;
    return s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c));
  };
  if (s.order() <= kExhaustiveAxiomOrder) {
    for (ElementId a = 0; a < n && report.associative; ++a)
      for (ElementId b = 0; b < n && report.associative; ++b)
        for (ElementId c = 0; c < n; ++c)
          if (!assoc(a, b, c)) {
            report.associative = false;
            break;
          }
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ElementId> pick(0, n - 1);
    for (std::uint64_t i = 0; i < kSampledTriples; ++i) {
      const ElementId a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c)) {
        report.associative = false;
        break;
      }
    }
  }
  return report;
}

ElementSet idempotent_set(const FiniteSemigroup& s) {
  ElementSet e(s.order());
  for (ElementId x = 0; x < s.order(); ++x) {
    if (s.mul(x, x) == x) e.insert(x);
  }
  return e;
}

Subsemigroup restrict_to(const FiniteSemigroup& s, const ElementSet& closed_subset,
                         std::string label) {
  const std::vector<ElementId> members = closed_subset.elements();
  if (members.empty()) throw InputError("cannot restrict to an empty subset");
  std::vector<ElementId> local(s.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> table;
  table.reserve(members.size() * members.size());
  for (ElementId a : members) {
    for (ElementId b : members) {
      const ElementId p = s.mul(a, b);
      if (!closed_subset.contains(p)) throw InputError("subset is not closed under product");
      table.push_back(local[p]);
    }
  }
  return {FiniteSemigroup(members.size(), std::move(table), std::move(label)), members};
}

Subsemigroup subsemigroup_closure(const FiniteSemigroup& s, const ElementSet& generators) {
  if (generators.owner_order() != s.order()) {
    throw InputError("generator set does not belong to this semigroup");
  }
  if (generators.empty()) throw InputError("subsemigroup closure needs at least one generator");

  // Worklist: every new element is multiplied against everything seen so far.
  ElementSet closed(s.order());
  std::vector<ElementId> members;
  std::vector<ElementId> pending = generators.elements();
  for (ElementId g : pending) closed.insert(g);
  members = pending;
  std::size_t done = 0;
  while (done < members.size()) {
    const ElementId x = members[done++];
    for (std::size_t i = 0; i < done; ++i) {
      const ElementId p = s.mul(x, members[i]);
      if (!closed.contains(p)) {
        closed.insert(p);
        members.push_back(p);
      }
    }
  }
  return restrict_to(s, closed, "<" + s.label() + " closure>");
}

FiniteSemigroup direct_product(const FiniteSemigroup& s1, const FiniteSemigroup& s2,
                               std::size_t order_cap) {
  const std::size_t n1 = s1.order(), n2 = s2.order();
  if (n1 > order_cap / n2) {
    throw ResourceError("direct product order " + std::to_string(n1 * n2) + " exceeds cap " +
                            std::to_string(order_cap),
                        n1 * n2, order_cap);
  }
  const std::size_t n = n1 * n2;
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto a1 = static_cast<ElementId>(a / n2), a2 = static_cast<ElementId>(a % n2);
    for (std::size_t b = 0; b < n; ++b) {
      const auto b1 = static_cast<ElementId>(b / n2), b2 = static_cast<ElementId>(b % n2);
      table[a * n + b] = static_cast<ElementId>(s1.mul(a1, b1) * n2 + s2.mul(a2, b2));
    }
  }
  return FiniteSemigroup(n, std::move(table), s1.label() + " x " + s2.label());
}

bool is_epimorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                    std::span<const ElementId> map) {
  if (map.size() != s.order()) {
    throw InputError("map has length " + std::to_string(map.size()) + ", expected " +
                     std::to_string(s.order()));
  }
  ElementSet image(t.order());
  for (ElementId v : map) image.insert(v);  // throws on invalid target ids
  if (image.size() != t.order()) return false;
  for (ElementId a = 0; a < s.order(); ++a) {
    for (ElementId b = 0; b < s.order(); ++b) {
      if (map[s.mul(a, b)] != t.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

FiniteSemigroup abelian_group(std::span<const std::uint64_t> factors, std::size_t order_cap) {
  std::size_t n = 1;
  std::string label;
  for (std::uint64_t d : factors) {
    if (d == 0) throw InputError("cyclic factor must be positive");
    if (d > order_cap || n > order_cap / d) {
      throw ResourceError("group order exceeds cap " + std::to_string(order_cap),
                          n * static_cast<std::size_t>(d), order_cap);
    }
    n *= d;
    label += (label.empty() ? "" : " x ") + std::string("C") + std::to_string(d);
  }
  if (label.empty()) label = "C1";
  const std::size_t r = factors.size();
  std::vector<std::vector<std::uint64_t>> digits(n, std::vector<std::uint64_t>(r));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t i = r; i-- > 0;) {
      digits[x][i] = rest % factors[i];
      rest /= factors[i];
    }
  }
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t id = 0;
      for (std::size_t i = 0; i < r; ++i) id = id * factors[i] + (digits[a][i] + digits[b][i]) % factors[i];
      table[a * n + b] = static_cast<ElementId>(id);
    }
  }
  return FiniteSemigroup(n, std::move(table), label);
}

bool is_group(const FiniteSemigroup& s) {
  const auto e = s.identity();
  if (!e) return false;
  for (ElementId x = 0; x < s.order(); ++x) {
    const auto r = s.row(x);
    if (std::find(r.begin(), r.end(), *e) == r.end()) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<std::uint64_t> abelian_invariants(const FiniteSemigroup& g) {
  if (!is_group(g) || !check_axioms(g).commutative) {
    throw InputError("'" + g.label() + "' is not a commutative group");
  }
  const ElementId e = *g.identity();
  std::vector<std::uint64_t> elem_order(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    std::uint64_t k = 1;
    for (ElementId y = x; y != e; y = g.mul(y, x)) ++k;
    elem_order[x] = k;
  }
  // Per prime p: log_p |G[p^k]| - log_p |G[p^(k-1)]| counts cyclic p-factors
  // of exponent >= k, which is the conjugate of the exponent partition.
  std::map<std::uint64_t, std::vector<unsigned>> exponents;  // p -> descending
  for (std::uint64_t p : prime_factors(g.order())) {
    std::vector<unsigned> at_least;  // at_least[k-1] = #factors with exponent >= k
    unsigned prev_log = 0;
    std::uint64_t pk = 1;
    for (unsigned k = 1;; ++k) {
      pk *= p;
      std::uint64_t count = 0;
      for (auto o : elem_order) count += (pk % o == 0) ? 1 : 0;
      unsigned log = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++log;
      if (log == prev_log) break;
      at_least.push_back(log - prev_log);
      prev_log = log;
    }
    std::vector<unsigned> exps(at_least.empty() ? 0 : at_least.front(), 0);
    for (unsigned cnt : at_least)
      for (unsigned i = 0; i < cnt; ++i) ++exps[i];
    exponents[p] = exps;  // already descending
  }
  std::size_t rank = 0;
  for (const auto& [p, exps] : exponents) rank = std::max(rank, exps.size());
  std::vector<std::uint64_t> factors(rank, 1);  // factors[0] is the largest
  for (const auto& [p, exps] : exponents) {
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (unsigned j = 0; j < exps[i]; ++j) factors[i] *= p;
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

namespace {

// Per-element data every automorphism preserves.
struct Invariant {
  std::uint32_t index;   // x^index is the first repeated power
  std::uint32_t period;
  std::uint32_t image;   // |x*S|
  std::uint32_t fixers;  // |{y : x*y = x}|
  auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> element_invariants(const FiniteSemigroup& s) {
  const std::size_t n = s.order();
  std::vector<Invariant> inv(n);
  std::vector<std::uint32_t> seen(n, 0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t tick = 0;
  for (ElementId x = 0; x < n; ++x) {
    ++tick;
    ElementId y = x;
    std::uint32_t k = 1;
    while (stamp[y] != tick) {
      stamp[y] = tick;
      seen[y] = k++;
      y = s.mul(y, x);
    }
    inv[x].index = seen[y];
    inv[x].period = k - seen[y];
    ++tick;
    std::uint32_t img = 0, fix = 0;
    const auto row = s.row(x);
    for (ElementId z = 0; z < n; ++z) {
      if (stamp[row[z]] != tick) {
        stamp[row[z]] = tick;
        ++img;
      }
      if (row[z] == x) ++fix;
    }
    inv[x].image = img;
    inv[x].fixers = fix;
  }
  return inv;
}

struct AutoSearch {
  const FiniteSemigroup& s;
  const std::vector<Invariant>& inv;
  std::vector<ElementId> gens;
  std::size_t fixed = 0;        // gens[0..fixed) map to themselves
  std::size_t max_size = 0;
  std::uint64_t work_left = 0;
  static constexpr ElementId kUnset = ~ElementId{0};
  std::vector<ElementId> phi{}, used{};
  std::vector<ElementId> domain{};
  std::vector<std::vector<ElementId>> found{};
  bool gave_up = false;

  // Extends phi after gens[i] got its image. Pairs (u, g_j) are closed in
  // order, so each is looked at once per assignment.
  bool propagate(std::size_t i, std::size_t old_size) {
    auto visit = [&](ElementId u, ElementId g) {
      if (work_left == 0) {
        gave_up = true;
        return false;
      }
      --work_left;
      const ElementId v = s.mul(u, g);
      const ElementId w = s.mul(phi[u], phi[g]);
      if (phi[v] == kUnset) {
        if (used[w] != kUnset || inv[v] != inv[w]) return false;
        phi[v] = w;
        used[w] = v;
        domain.push_back(v);
        return true;
      }
      return phi[v] == w;
    };
    for (std::size_t d = 0; d < old_size; ++d)
      if (!visit(domain[d], gens[i])) return false;
    for (std::size_t d = old_size; d < domain.size(); ++d)
      for (std::size_t j = 0; j <= i; ++j)
        if (!visit(domain[d], gens[j])) return false;
    return true;
  }

  void undo(std::size_t size) {
    while (domain.size() > size) {
      used[phi[domain.back()]] = kUnset;
      phi[domain.back()] = kUnset;
      domain.pop_back();
    }
  }

  // Returns false to stop the whole enumeration.
  bool assign(std::size_t i) {
    if (i == gens.size()) {
      if (domain.size() != s.order()) return true;
      found.push_back(phi);
      return found.size() <= max_size;
    }
    const ElementId g = gens[i];
    const std::size_t base = domain.size();
    for (ElementId h = 0; h < s.order(); ++h) {
      if (i < fixed && h != g) continue;
      if (used[h] != kUnset || inv[h] != inv[g]) continue;
      phi[g] = h;
      used[h] = g;
      domain.push_back(g);
      const bool ok = propagate(i, base);
      if (gave_up) return false;
      if (ok && !assign(i + 1)) return false;
      undo(base);
    }
    return true;
  }
};

}  // namespace

std::vector<std::vector<ElementId>> automorphism_subgroup(const FiniteSemigroup& s,
                                                          std::size_t max_size) {
  const std::size_t n = s.order();
  std::vector<ElementId> identity(n);
  for (ElementId x = 0; x < n; ++x) identity[x] = x;
  if (n <= 1) return {identity};

  const auto inv = element_invariants(s);
  // Greedy generating set: smallest id outside the closure so far.
  std::vector<ElementId> gens;
  std::vector<bool> in(n, false);
  std::vector<ElementId> members;
  for (ElementId x = 0; x < n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    const std::size_t before = members.size();
    in[x] = true;
    members.push_back(x);
    for (std::size_t d = 0; d < members.size(); ++d) {
      // old members only need the new generator; new ones need all of them
      const std::size_t from = d < before ? gens.size() - 1 : 0;
      for (std::size_t j = from; j < gens.size(); ++j) {
        const ElementId v = s.mul(members[d], gens[j]);
        if (!in[v]) {
          in[v] = true;
          members.push_back(v);
        }
      }
    }
  }

  std::uint64_t budget = 40'000'000;
  for (std::size_t fixed = 0; fixed < gens.size() && budget > 1; ++fixed) {
    // Each attempt may spend half of what is left, so a stuck attempt still
    // leaves room for the smaller stabilizers after it.
    const std::uint64_t share = budget / 2;
    AutoSearch a{s, inv, gens, fixed, max_size, share};
    a.phi.assign(n, AutoSearch::kUnset);
    a.used.assign(n, AutoSearch::kUnset);
    const bool complete = a.assign(0);
    budget -= share - a.work_left;
    if (complete) {
      std::sort(a.found.begin(), a.found.end());
      return a.found;  // the identity sorts first
    }
  }
  return {identity};
}

}  // namespace ebc
