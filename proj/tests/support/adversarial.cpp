#include "adversarial.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "ebc/ring.hpp"

namespace ebc::testing {

FiniteSemigroup null_semigroup(std::size_t n) {
  return FiniteSemigroup(n, std::vector<ElementId>(n * n, 0), "null" + std::to_string(n));
}

FiniteSemigroup chain_semilattice(std::size_t n) {
  std::vector<ElementId> t(n * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) t[a * n + b] = std::min(a, b);
  return FiniteSemigroup(n, std::move(t), "chain" + std::to_string(n));
}

FiniteSemigroup monogenic(std::size_t index, std::size_t period) {
  const std::size_t n = index + period - 1;
  // id k is a^(k+1); exponents past the tail wrap into the cycle
  auto reduce = [&](std::size_t e) {
    if (e <= n) return e;
    return index + (e - index) % period;
  };
  std::vector<ElementId> t(n * n);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b)
      t[(a - 1) * n + (b - 1)] = static_cast<ElementId>(reduce(a + b) - 1);
  return FiniteSemigroup(n, std::move(t),
                         "mono(" + std::to_string(index) + "," + std::to_string(period) + ")");
}

FiniteSemigroup adjoin_zero(const FiniteSemigroup& s) {
  const std::size_t n = s.order() + 1;
  const auto z = static_cast<ElementId>(s.order());
  std::vector<ElementId> t(n * n, z);
  for (ElementId a = 0; a < s.order(); ++a)
    for (ElementId b = 0; b < s.order(); ++b) t[a * n + b] = s.mul(a, b);
  return FiniteSemigroup(n, std::move(t), s.label() + "^0");
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  const std::size_t n = s.order() + 1;
  const auto e = static_cast<ElementId>(s.order());
  std::vector<ElementId> t(n * n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (a == e) t[a * n + b] = b;
      else if (b == e) t[a * n + b] = a;
      else t[a * n + b] = s.mul(a, b);
    }
  }
  return FiniteSemigroup(n, std::move(t), s.label() + "^1");
}

FiniteSemigroup relabel(const FiniteSemigroup& s, const std::vector<ElementId>& perm) {
  const std::size_t n = s.order();
  std::vector<ElementId> t(n * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) t[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
  return FiniteSemigroup(n, std::move(t), s.label() + "~");
}

std::vector<FiniteSemigroup> adversarial_semigroups(std::size_t max_order, std::uint64_t seed) {
  std::vector<FiniteSemigroup> base;
  auto keep = [&](FiniteSemigroup s) {
    if (s.order() <= max_order) base.push_back(std::move(s));
  };
  for (std::size_t n = 1; n <= max_order; ++n) {
    keep(null_semigroup(n));
    keep(chain_semilattice(n));
  }
  for (std::size_t k = 1; (std::size_t{1} << k) <= max_order; ++k) {
    keep(mult_semigroup(make_boolean(k)));
  }
  std::vector<FiniteSemigroup> mono;
  for (std::size_t i = 1; i <= max_order; ++i)
    for (std::size_t m = 1; i + m - 1 <= max_order; ++m) mono.push_back(monogenic(i, m));
  for (const auto& m : mono) {
    keep(m);
    keep(adjoin_identity(m));
    keep(adjoin_zero(m));
  }
  std::vector<std::vector<std::uint64_t>> groups{{2, 2}, {2, 4}, {3, 3}, {2, 2, 2}};
  for (std::uint64_t n = 1; n <= max_order; ++n) groups.push_back({n});
  for (const auto& g : groups) {
    const std::uint64_t order = std::accumulate(g.begin(), g.end(), std::uint64_t{1},
                                                std::multiplies<>());
    if (order > max_order) continue;
    keep(abelian_group(g));
    keep(adjoin_zero(abelian_group(g)));
  }
  for (std::size_t n = 1; n < max_order; ++n) keep(adjoin_identity(null_semigroup(n)));
  for (const auto& a : mono) {
    for (const auto& b : mono) {
      if (a.order() < 2 || b.order() < 2 || a.order() * b.order() > max_order) continue;
      keep(direct_product(a, b));
    }
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t n = 2; n <= 30; ++n) {
    const FiniteSemigroup s = mult_semigroup(make_zmod(n));
    for (int attempt = 0; attempt < 3; ++attempt) {
      ElementSet gens(s.order());
      std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
      for (int k = 0; k < 2; ++k) gens.insert(pick(rng));
      Subsemigroup sub = subsemigroup_closure(s, gens);
      if (sub.semigroup.order() >= 3) keep(std::move(sub.semigroup));
    }
  }

  std::vector<FiniteSemigroup> out;
  for (const auto& s : base) {
    out.push_back(s);
    std::vector<ElementId> perm(s.order());
    std::iota(perm.begin(), perm.end(), ElementId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    out.push_back(relabel(s, perm));
  }
  return out;
}

}  // namespace ebc::testing
