#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "adversarial.hpp"
#include "ebc/errors.hpp"
#include "ebc/ring.hpp"
#include "ebc/semigroup.hpp"
#include "iso.hpp"

using namespace ebc;

namespace {

FiniteSemigroup zmod_sg(std::uint64_t n) { return mult_semigroup(make_zmod(n)); }

std::vector<ElementId> ids(const ElementSet& s) { return s.elements(); }

}  // namespace

TEST_CASE("product agrees with modular arithmetic") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto s = zmod_sg(n);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) CHECK(s.product(a, b) == (a * b) % n);
  }
  CHECK(zmod_sg(4).product(2, 3) == 2);
  CHECK(zmod_sg(6).product(2, 5) == 4);
}

TEST_CASE("identity law") {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const auto s = zmod_sg(n);
    const auto e = s.identity();
    REQUIRE(e.has_value());
    for (ElementId x = 0; x < n; ++x) CHECK(s.product(*e, x) == x);
  }
  CHECK_FALSE(testing::null_semigroup(3).identity().has_value());
}

TEST_CASE("out of range ids are input errors") {
  const auto s = zmod_sg(4);
  CHECK_THROWS_AS(s.product(4, 0), InputError);
  CHECK_THROWS_AS(s.product(0, 17), InputError);
}

TEST_CASE("tables must be closed") {
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 1, 1, 2}, "bad"), InputError);
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 1, 1}, "short"), InputError);
}

TEST_CASE("idempotent sets") {
  auto brute = [](std::uint64_t n) {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < n; ++x)
      if ((x * x) % n == x) out.push_back(x);
    return out;
  };
  CHECK(ids(idempotent_set(zmod_sg(2))) == std::vector<ElementId>{0, 1});
  CHECK(ids(idempotent_set(zmod_sg(4))) == std::vector<ElementId>{0, 1});
  CHECK(ids(idempotent_set(zmod_sg(12))) == std::vector<ElementId>{0, 1, 4, 9});
  for (std::uint64_t n = 1; n <= 40; ++n) CHECK(ids(idempotent_set(zmod_sg(n))) == brute(n));
}

TEST_CASE("subsemigroup closure") {
  const auto z4 = zmod_sg(4);
  auto c = subsemigroup_closure(z4, ElementSet(4, {3}));
  CHECK(c.embedding == std::vector<ElementId>{1, 3});
  CHECK(c.semigroup.order() == 2);

  const auto z6 = zmod_sg(6);
  c = subsemigroup_closure(z6, ElementSet(6, {2}));
  CHECK(c.embedding == std::vector<ElementId>{2, 4});

  c = subsemigroup_closure(z6, ElementSet::full(6));
  CHECK(c.semigroup == z6);

  CHECK_THROWS_AS(subsemigroup_closure(z6, ElementSet(6)), InputError);
  CHECK_THROWS_AS(subsemigroup_closure(z6, ElementSet(5)), InputError);
}

TEST_CASE("closure of a closure is itself") {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    const auto s = zmod_sg(n);
    for (ElementId g = 0; g < n; ++g) {
      const auto once = subsemigroup_closure(s, ElementSet(n, {g}));
      const auto twice = subsemigroup_closure(once.semigroup, ElementSet::full(once.semigroup.order()));
      CHECK(twice.semigroup == once.semigroup);
      // the embedding really lands on a closed subset
      std::set<ElementId> image(once.embedding.begin(), once.embedding.end());
      for (ElementId a : once.embedding)
        for (ElementId b : once.embedding) CHECK(image.count(s.mul(a, b)) == 1);
    }
  }
}

TEST_CASE("direct products") {
  const auto f2 = zmod_sg(2), f3 = zmod_sg(3);
  const auto p = direct_product(f2, f3);
  CHECK(p.order() == 6);
  std::vector<ElementId> expect;
  for (ElementId a : idempotent_set(f2).elements())
    for (ElementId b : idempotent_set(f3).elements()) expect.push_back(a * 3 + b);
  CHECK(ids(idempotent_set(p)) == expect);
  CHECK(testing::semigroup_isomorphism(p, zmod_sg(6)).has_value());
  CHECK_FALSE(testing::semigroup_isomorphism(p, zmod_sg(4)).has_value());
  CHECK_THROWS_AS(direct_product(zmod_sg(64), zmod_sg(65)), ResourceError);
}

TEST_CASE("epimorphism checks") {
  const auto z4 = zmod_sg(4), z2 = zmod_sg(2);
  std::vector<ElementId> id(4);
  std::iota(id.begin(), id.end(), ElementId{0});
  CHECK(is_epimorphism(z4, z4, id));
  CHECK(is_epimorphism(z4, z2, std::vector<ElementId>{0, 1, 0, 1}));
  // 2 is not idempotent in Z/3
  CHECK_FALSE(is_epimorphism(z4, zmod_sg(3), std::vector<ElementId>{2, 2, 2, 2}));
  // multiplicative but not onto
  CHECK_FALSE(is_epimorphism(z4, z2, std::vector<ElementId>{0, 0, 0, 0}));
  CHECK_THROWS_AS(is_epimorphism(z4, z2, std::vector<ElementId>{0, 1}), InputError);
  CHECK_THROWS_AS(is_epimorphism(z4, z2, std::vector<ElementId>{0, 1, 0, 5}), InputError);
}

TEST_CASE("axiom checks") {
  for (const auto& s : testing::adversarial_semigroups(8)) {
    const auto r = check_axioms(s);
    CHECK_MESSAGE(r.associative, s.label());
    CHECK_MESSAGE(r.commutative, s.label());
    CHECK(r.exhaustive);
  }
  // commutative, not associative: a*a = b, everything else a
  const FiniteSemigroup bad(2, {1, 0, 0, 0}, "bad");
  CHECK_FALSE(check_axioms(bad).associative);
  const FiniteSemigroup left_zero(2, {0, 0, 1, 1}, "lz");
  CHECK_FALSE(check_axioms(left_zero).commutative);

  const auto big = zmod_sg(100);
  const auto r = check_axioms(big, 3);
  CHECK(r.associative);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.triples_checked == kSampledTriples);
}

TEST_CASE("abelian groups") {
  const std::vector<std::uint64_t> f{2, 4};
  const auto g = abelian_group(f);
  CHECK(g.order() == 8);
  CHECK(g.identity() == ElementId{0});
  CHECK(is_group(g));
  CHECK(g.label() == "C2 x C4");
  CHECK_FALSE(is_group(zmod_sg(5)));
  CHECK(is_group(restrict_to(zmod_sg(5), units(make_zmod(5)), "U").semigroup));

  const std::vector<std::vector<std::uint64_t>> cases{{2}, {6}, {2, 2}, {3, 9}, {2, 2, 4}, {2, 6, 12}};
  for (const auto& c : cases) CHECK(abelian_invariants(abelian_group(c)) == c);
  // non-canonical presentations come back in invariant-factor form
  CHECK(abelian_invariants(abelian_group(std::vector<std::uint64_t>{6, 4})) ==
        std::vector<std::uint64_t>{2, 12});
  CHECK(abelian_invariants(abelian_group(std::vector<std::uint64_t>{1})).empty());
  CHECK_THROWS_AS(abelian_invariants(zmod_sg(4)), InputError);
}

TEST_CASE("automorphism subgroups") {
  auto check_all = [](const FiniteSemigroup& s) {
    const auto autos = automorphism_subgroup(s);
    REQUIRE(!autos.empty());
    std::vector<ElementId> id(s.order());
    std::iota(id.begin(), id.end(), ElementId{0});
    CHECK(autos.front() == id);
    for (const auto& p : autos) {
      std::vector<ElementId> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == id);
      CHECK(is_epimorphism(s, s, p));
    }
    // closed under composition
    std::set<std::vector<ElementId>> all(autos.begin(), autos.end());
    for (const auto& p : autos) {
      for (const auto& q : autos) {
        std::vector<ElementId> pq(s.order());
        for (ElementId x = 0; x < s.order(); ++x) pq[x] = p[q[x]];
        CHECK(all.count(pq) == 1);
      }
    }
    return autos.size();
  };
  // |Aut(Z_n)| = phi(n)
  CHECK(check_all(abelian_group(std::vector<std::uint64_t>{12})) == 4);
  CHECK(check_all(abelian_group(std::vector<std::uint64_t>{7})) == 6);
  // GL(2, 2)
  CHECK(check_all(abelian_group(std::vector<std::uint64_t>{2, 2})) == 6);
  CHECK(check_all(testing::chain_semilattice(6)) == 1);
  // the multiplicative monoid of GF(8): Aut of the cyclic unit group
  CHECK(check_all(mult_semigroup(make_gf(2, 3))) == 6);
  check_all(mult_semigroup(make_boolean(3)));
  check_all(testing::null_semigroup(5));
  // small cap falls back to a stabilizer subgroup
  const auto g = abelian_group(std::vector<std::uint64_t>{2, 2, 2});
  const auto capped = automorphism_subgroup(g, 10);
  CHECK(capped.size() <= 10);
  CHECK(168 % capped.size() == 0);
}
