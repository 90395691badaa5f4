#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ebc/dsl.hpp"
#include "ebc/errors.hpp"
#include "ebc/ring.hpp"
#include "ebc/solver.hpp"
#include "iso.hpp"

using namespace ebc;

namespace {

FiniteRing ring(const char* text) { return dsl::elaborate(*dsl::parse(text)); }

bool brute_is_ideal(const FiniteRing& r, const std::vector<ElementId>& members) {
  std::vector<char> in(r.order(), 0);
  for (ElementId x : members) in[x] = 1;
  if (!in[r.zero()]) return false;
  for (ElementId a : members) {
    for (ElementId b : members)
      if (!in[r.sub(a, b)]) return false;
    for (ElementId x = 0; x < r.order(); ++x)
      if (!in[r.mul(a, x)]) return false;
  }
  return true;
}

// Every ideal by subset enumeration; only for tiny rings.
std::vector<std::vector<ElementId>> brute_ideals(const FiniteRing& r) {
  std::vector<std::vector<ElementId>> out;
  const std::size_t n = r.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<ElementId> members;
    for (ElementId x = 0; x < n; ++x)
      if ((mask >> x) & 1U) members.push_back(x);
    if (brute_is_ideal(r, members)) out.push_back(members);
  }
  return out;
}

std::set<std::vector<ElementId>> brute_maximal(const FiniteRing& r) {
  auto ideals = brute_ideals(r);
  std::set<std::vector<ElementId>> out;
  for (const auto& m : ideals) {
    if (m.size() == r.order()) continue;
    bool maximal = true;
    for (const auto& bigger : ideals) {
      if (bigger.size() > m.size() && bigger.size() < r.order() &&
          std::includes(bigger.begin(), bigger.end(), m.begin(), m.end()))
        maximal = false;
    }
    if (maximal) out.insert(m);
  }
  return out;
}

std::vector<ElementId> brute_units(const FiniteRing& r) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < r.order(); ++x)
    for (ElementId y = 0; y < r.order(); ++y)
      if (r.mul(x, y) == r.one()) {
        out.push_back(x);
        break;
      }
  return out;
}

std::vector<ElementId> brute_nil(const FiniteRing& r) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < r.order(); ++x) {
    ElementId p = x;
    for (std::size_t k = 0; k <= r.order(); ++k) p = r.mul(p, x);
    if (p == r.zero()) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> brute_jacobson(const FiniteRing& r) {
  const auto u = brute_units(r);
  std::vector<ElementId> out;
  for (ElementId x = 0; x < r.order(); ++x) {
    bool ok = true;
    for (ElementId y = 0; y < r.order() && ok; ++y)
      ok = std::binary_search(u.begin(), u.end(), r.add(r.one(), r.mul(y, x)));
    if (ok) out.push_back(x);
  }
  return out;
}

const char* const kSmallRings[] = {
    "Z/2",      "Z/4",         "Z/6",           "Z/8",           "Z/9",
    "Z/10",     "Z/12",        "Z/15",          "Z/16",          "GF(4)",
    "GF(8)",    "GF(9)",       "bool(2)",       "bool(3)",       "Z/2 x Z/4",
    "Z/2 x Z/6", "Z/3 x Z/4",  "Z/2[x]/(x^2)",  "Z/2[x]/(x^3)",  "Z/3[x]/(x^2)",
    "Z/4[x]/(x^2 + x + 1)",    "Z/4[x]/(x^2)",  "Z/2[x]/(x^2 + 1) x Z/3", "GF(4) x Z/3",
};

}  // namespace

TEST_CASE("Z/n tables") {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const auto r = make_zmod(n);
    CHECK(r.order() == n);
    CHECK(check_ring_axioms(r).ok());
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        CHECK(r.add(a, b) == (a + b) % n);
        CHECK(r.mul(a, b) == (a * b) % n);
      }
    CHECK(r.from_integer(-1) == (n - 1) % n);
  }
  CHECK_THROWS_AS(make_zmod(0), InputError);
  CHECK_THROWS_AS(make_zmod(5000), ResourceError);
}

TEST_CASE("smallest irreducible moduli") {
  // first monic polynomial without a root, coefficient vectors compared
  // constant term first; for degree <= 3 no root means irreducible
  auto first_rootless = [](std::uint64_t p, std::uint64_t k) {
    std::vector<std::uint64_t> c(k + 1, 0);
    c[k] = 1;
    for (;;) {
      bool rootless = true;
      for (std::uint64_t x = 0; x < p && rootless; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = (v * x + c[i]) % p;
        rootless = v != 0;
      }
      if (rootless) return c;
      // increment, constant term most significant for the order
      std::size_t i = k;
      while (i-- > 0) {
        if (++c[i] < p) break;
        c[i] = 0;
      }
    }
  };
  for (std::uint64_t p : {2, 3, 5, 7})
    for (std::uint64_t k : {2, 3}) CHECK(smallest_irreducible(p, k) == first_rootless(p, k));
  CHECK(smallest_irreducible(2, 1) == std::vector<std::uint64_t>{0, 1});
  CHECK(smallest_irreducible(3, 2) == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(smallest_irreducible(5, 2) == std::vector<std::uint64_t>{1, 1, 1});
  // degree 4: rootless and not a multiple of x^2 + x + 1, the only quadratic
  CHECK(smallest_irreducible(2, 4) == std::vector<std::uint64_t>{1, 0, 0, 1, 1});
  CHECK_THROWS_AS(smallest_irreducible(4, 2), InputError);
}

TEST_CASE("finite fields") {
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                                                           {3, 2}, {5, 1}, {5, 2}, {7, 2}, {2, 6}};
  for (auto [p, k] : cases) {
    const auto f = make_gf(p, k);
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < k; ++i) q *= p;
    REQUIRE(f.order() == q);
    CHECK(check_ring_axioms(f).ok());
    CHECK(units(f).size() == q - 1);
    CHECK(f.from_integer(static_cast<std::int64_t>(p)) == f.zero());
    const auto u = restrict_to(mult_semigroup(f), units(f), "U");
    // the unit group of a finite field is cyclic
    const auto inv = abelian_invariants(u.semigroup);
    if (q > 2) CHECK(inv == std::vector<std::uint64_t>{q - 1});
    CHECK(jacobson_radical(f).size() == 1);
    CHECK(maximal_ideals(f).size() == 1);
    CHECK(maximal_ideals(f)[0].index == q);
  }
  CHECK_THROWS_AS(make_gf(6, 1), InputError);
  CHECK_THROWS_AS(make_gf(2, 0), InputError);
}

TEST_CASE("presentations of the same ring are isomorphic") {
  CHECK(testing::ring_isomorphism(make_gf(2, 2), ring("Z/2[x]/(x^2 + x + 1)")).has_value());
  CHECK(testing::ring_isomorphism(ring("GF(3) x GF(5)"), make_zmod(15)).has_value());
  CHECK(testing::ring_isomorphism(ring("Z/2 x Z/2"), make_boolean(2)).has_value());
  CHECK(testing::ring_isomorphism(ring("Z/3[x]/(x^2 + 1)"), make_gf(3, 2)).has_value());
  // x^2 + 1 = (x + 1)^2 over Z/2
  CHECK(testing::ring_isomorphism(ring("Z/2[x]/(x^2 + 1)"), ring("Z/2[x]/(x^2)")).has_value());
  CHECK_FALSE(testing::ring_isomorphism(make_zmod(4), make_boolean(2)).has_value());
  CHECK_FALSE(testing::ring_isomorphism(make_zmod(4), make_gf(2, 2)).has_value());
}

TEST_CASE("units, radicals and maximal ideals against brute force") {
  for (const char* text : kSmallRings) {
    INFO(text);
    const auto r = ring(text);
    REQUIRE(r.order() <= 16);
    CHECK(check_ring_axioms(r).ok());
    CHECK(units(r).elements() == brute_units(r));
    CHECK(nilradical(r).elements().elements() == brute_nil(r));
    CHECK(jacobson_radical(r).elements().elements() == brute_jacobson(r));

    const auto maxes = maximal_ideals(r);
    std::set<std::vector<ElementId>> got;
    for (const auto& m : maxes) {
      got.insert(m.ideal.elements().elements());
      CHECK(m.index * m.ideal.size() == r.order());
      // R/M is a field
      const auto q = quotient_ring(r, m.ideal);
      CHECK(q.ring.order() == m.index);
      CHECK(units(q.ring).size() == m.index - 1);
      // e is an idempotent outside M
      CHECK(r.mul(m.primitive_idempotent, m.primitive_idempotent) == m.primitive_idempotent);
      CHECK_FALSE(m.ideal.elements().contains(m.primitive_idempotent));
    }
    CHECK(got == brute_maximal(r));
    CHECK(intersection_of(r, maxes) == jacobson_radical(r));

    const auto rep = analyze(r);
    CHECK(rep.index_two_count + rep.index_gt_two_count == maxes.size());
    CHECK(rep.semisimple_factors.has_value() == (rep.jacobson_radical.size() == 1));
  }
}

TEST_CASE("Z/n maximal ideals are pZ/n") {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const auto r = make_zmod(n);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2, m = n; p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    const auto maxes = maximal_ideals(r);
    REQUIRE(maxes.size() == primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
      CHECK(maxes[i].index == primes[i]);
      std::vector<ElementId> expect;
      for (ElementId x = 0; x < n; x += static_cast<ElementId>(primes[i])) expect.push_back(x);
      CHECK(maxes[i].ideal.elements().elements() == expect);
    }
    std::uint64_t rad = 1;
    for (auto p : primes) rad *= p;
    CHECK(nilradical(r).size() == n / rad);
  }
}

TEST_CASE("ideals") {
  const auto r = make_zmod(12);
  CHECK(is_ideal(r, ElementSet(12, {0, 4, 8})));
  CHECK_FALSE(is_ideal(r, ElementSet(12, {0, 4})));
  CHECK_FALSE(is_ideal(r, ElementSet(12, {1, 4})));
  CHECK_THROWS_AS(Ideal::verified(r, ElementSet(12, {0, 5})), InputError);
  const auto i4 = ideal_generated(r, std::vector<ElementId>{4});
  const auto i6 = ideal_generated(r, std::vector<ElementId>{6});
  CHECK(i4.elements() == ElementSet(12, {0, 4, 8}));
  CHECK(ideal_sum(r, i4, i6).elements() == ElementSet(12, {0, 2, 4, 6, 8, 10}));
  CHECK(ideal_intersection(i4, i6).size() == 1);
  CHECK(ideal_generated(r, std::vector<ElementId>{9, 8}).size() == 12);
  CHECK_THROWS_AS(ideal_generated(r, std::vector<ElementId>{12}), InputError);
}

TEST_CASE("quotients") {
  const auto r = make_zmod(12);
  const auto q = quotient_ring(r, ideal_generated(r, std::vector<ElementId>{4}));
  CHECK(q.ring.order() == 4);
  CHECK(testing::ring_isomorphism(q.ring, make_zmod(4)).has_value());
  for (ElementId a = 0; a < 12; ++a)
    for (ElementId b = 0; b < 12; ++b) {
      CHECK(q.projection[r.add(a, b)] == q.ring.add(q.projection[a], q.projection[b]));
      CHECK(q.projection[r.mul(a, b)] == q.ring.mul(q.projection[a], q.projection[b]));
    }
  // R/J of Z/8 x Z/9 is Z/2 x Z/3
  const auto s = ring("Z/8 x Z/9");
  const auto rj = quotient_ring(s, jacobson_radical(s));
  CHECK(testing::ring_isomorphism(rj.ring, make_zmod(6)).has_value());
}

TEST_CASE("boolean rings and semisimple decomposition") {
  CHECK(is_boolean(make_zmod(2)));
  CHECK(is_boolean(make_boolean(4)));
  CHECK_FALSE(is_boolean(make_zmod(3)));
  CHECK_FALSE(is_boolean(make_zmod(4)));
  CHECK(semisimple_decomposition(make_zmod(4)) == std::nullopt);
  const auto d = semisimple_decomposition(ring("GF(9) x Z/5 x Z/2 x GF(4)"));
  REQUIRE(d.has_value());
  const std::vector<FieldDescriptor> expect{{2, 1}, {2, 2}, {3, 2}, {5, 1}};
  CHECK(*d == expect);
  CHECK(semisimple_decomposition(make_zmod(30))->size() == 3);
  CHECK(semisimple_decomposition(make_boolean(3))->size() == 3);
}

TEST_CASE("raw tables") {
  // Z/3 relabelled with zero at id 2 and one at id 0
  const std::vector<ElementId> add{1, 2, 0, 2, 0, 1, 0, 1, 2};
  const std::vector<ElementId> mul{0, 1, 2, 1, 0, 2, 2, 2, 2};
  const auto r = ring_from_tables(3, add, mul, "t");
  CHECK(r.zero() == 2);
  CHECK(r.one() == 0);
  CHECK(testing::ring_isomorphism(r, make_zmod(3)).has_value());
  // breaks distributivity
  auto bad = mul;
  bad[1 * 3 + 1] = 1;
  CHECK_THROWS_AS(ring_from_tables(3, add, bad, "t"), InputError);
  CHECK_THROWS_AS(ring_from_tables(3, add, {0, 1}, "t"), InputError);
}

TEST_CASE("zero ring") {
  const auto z1 = make_zmod(1);
  CHECK(z1.order() == 1);
  CHECK_THROWS_AS(analyze(z1), InputError);
  CHECK_THROWS_AS(maximal_ideals(z1), InputError);
  CHECK(claim_b_sequence(z1).sequence.empty());
}

TEST_CASE("CRT certificates") {
  struct Case {
    const char* ring;
    std::size_t t;
  };
  const Case cases[] = {{"Z/15", 2},       {"Z/35", 2},   {"Z/105", 3},
                        {"GF(3) x GF(5) x GF(7)", 3},      {"Z/6", 1},
                        {"Z/30", 2},       {"bool(3)", 0}, {"Z/9", 1},
                        {"Z/9 x Z/25", 2}, {"Z/3[x]/(x^2) x GF(4)", 2}};
  for (const auto& c : cases) {
    INFO(c.ring);
    const auto r = ring(c.ring);
    const auto cert = claim_b_sequence(r);
    REQUIRE(cert.sequence.size() == c.t);
    CHECK(cert.verified_free);
    CHECK(cert.lower_bound == c.t + 1);
    CHECK(is_free(mult_semigroup(r), cert.sequence));
    for (std::size_t i = 0; i < c.t; ++i) {
      const auto& mi = cert.ideals_used[i].ideal.elements();
      CHECK(cert.ideals_used[i].index > 2);
      const ElementId a = cert.sequence[i];
      CHECK(mi.contains(r.sub(a, cert.residues[i].representative)));
      for (std::size_t j = 0; j < c.t; ++j) {
        if (j == i) continue;
        CHECK(cert.ideals_used[j].ideal.elements().contains(r.sub(a, r.one())));
      }
    }
    if (r.order() <= 128) CHECK(erdos_burgess(mult_semigroup(r)).value >= cert.lower_bound);
  }
}
