#include "ebc/ring.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ebc/errors.hpp"
#include "ebc/solver.hpp"

namespace ebc {

Ideal trusted_ideal(ElementSet e) { return Ideal(std::move(e)); }

namespace {

void check_cap(std::size_t order, std::size_t cap, const std::string& what) {
  if (order > cap) {
    throw ResourceError(what + " has order " + std::to_string(order) + ", above cap " +
                            std::to_string(cap),
                        order, cap);
  }
}

// p^k with overflow saturating to SIZE_MAX.
std::size_t checked_pow(std::uint64_t p, std::uint64_t k) {
  std::size_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (p != 0 && out > SIZE_MAX / p) return SIZE_MAX;
    out *= p;
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool ids_less(const ElementSet& a, const ElementSet& b) {
  const auto ea = a.elements(), eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace

// ---- FiniteRing -----------------------------------------------------------

FiniteRing::FiniteRing(std::size_t order, std::vector<ElementId> add, std::vector<ElementId> mul,
                       ElementId zero, ElementId one, std::string label)
    : order_(order),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(order, 0),
      zero_(zero),
      one_(one),
      label_(std::move(label)) {
  if (order_ == 0) throw InputError("ring must be nonempty");
  if (add_.size() != order_ * order_ || mul_.size() != order_ * order_) {
    throw InputError("ring tables must have order*order = " + std::to_string(order_ * order_) +
                     " entries");
  }
  for (std::size_t i = 0; i < add_.size(); ++i) {
    if (add_[i] >= order_ || mul_[i] >= order_) {
      throw InputError("ring table entry at position " + std::to_string(i) + " out of range");
    }
  }
  if (zero_ >= order_ || one_ >= order_) throw InputError("zero/one id out of range");
  if (order_ > 1 && zero_ == one_) throw InputError("zero equals one in a ring of order > 1");
  for (ElementId a = 0; a < order_; ++a) {
    bool found = false;
    for (ElementId b = 0; b < order_ && !found; ++b) {
      if (this->add(a, b) == zero_) {
        neg_[a] = b;
        found = true;
      }
    }
    if (!found) throw InputError("element " + std::to_string(a) + " has no additive inverse");
  }
}

ElementId FiniteRing::from_integer(std::int64_t n) const {
  std::uint64_t characteristic = 1;
  for (ElementId x = one_; x != zero_; x = add(x, one_)) ++characteristic;
  auto m = static_cast<std::int64_t>(characteristic);
  std::int64_t reduced = ((n % m) + m) % m;
  ElementId acc = zero_;
  for (std::int64_t i = 0; i < reduced; ++i) acc = add(acc, one_);
  return acc;
}

RingAxiomReport check_ring_axioms(const FiniteRing& r, std::uint64_t seed) {
  RingAxiomReport rep;
  const auto n = static_cast<ElementId>(r.order());
  for (ElementId a = 0; a < n; ++a) {
    if (r.add(r.zero(), a) != a) rep.additive_group = false;
    if (r.mul(r.one(), a) != a) rep.multiplicative_monoid = false;
    if (r.add(a, r.neg(a)) != r.zero()) rep.additive_group = false;
    for (ElementId b = a + 1; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) rep.additive_group = false;
      if (r.mul(a, b) != r.mul(b, a)) rep.multiplicative_monoid = false;
    }
  }
  auto triple = [&](ElementId a, ElementId b, ElementId c) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) rep.additive_group = false;
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) rep.multiplicative_monoid = false;
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) rep.distributive = false;
  };
  if (r.order() <= kExhaustiveAxiomOrder) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c) triple(a, b, c);
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ElementId> pick(0, n - 1);
    for (std::uint64_t i = 0; i < kSampledTriples; ++i) {
      const ElementId a = pick(rng), b = pick(rng), c = pick(rng);
      triple(a, b, c);
    }
  }
  return rep;
}

FiniteRing ring_from_tables(std::size_t order, std::vector<ElementId> add,
                            std::vector<ElementId> mul, std::string label, std::uint64_t seed) {
  if (order == 0) throw InputError("ring must be nonempty");
  if (add.size() != order * order || mul.size() != order * order) {
    throw InputError("ring tables must have order*order = " + std::to_string(order * order) +
                     " entries");
  }
  // Entry range is re-checked by the FiniteRing constructor; guard lookups here.
  for (std::size_t i = 0; i < add.size(); ++i) {
    if (add[i] >= order || mul[i] >= order) {
      throw InputError("ring table entry at position " + std::to_string(i) + " out of range");
    }
  }
  auto identity_of = [&](const std::vector<ElementId>& t) -> std::optional<ElementId> {
    for (ElementId e = 0; e < order; ++e) {
      bool ok = true;
      for (ElementId x = 0; x < order && ok; ++x) ok = t[e * order + x] == x && t[x * order + e] == x;
      if (ok) return e;
    }
    return std::nullopt;
  };
  const auto zero = identity_of(add);
  const auto one = identity_of(mul);
  if (!zero) throw InputError("addition table has no identity element");
  if (!one) throw InputError("multiplication table has no identity element");
  FiniteRing r(order, std::move(add), std::move(mul), *zero, *one, std::move(label));
  const auto rep = check_ring_axioms(r, seed);
  if (!rep.ok()) {
    std::string why;
    if (!rep.additive_group) why += " additive-group";
    if (!rep.multiplicative_monoid) why += " commutative-monoid";
    if (!rep.distributive) why += " distributivity";
    throw InputError("tables violate ring axioms:" + why);
  }
  return r;
}

// ---- constructors ---------------------------------------------------------

FiniteRing make_zmod(std::uint64_t n, std::size_t order_cap) {
  if (n == 0) throw InputError("Z/n needs n >= 1");
  check_cap(n, order_cap, "Z/" + std::to_string(n));
  std::vector<ElementId> add(n * n), mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<ElementId>((a + b) % n);
      mul[a * n + b] = static_cast<ElementId>((a * b) % n);
    }
  }
  return FiniteRing(n, std::move(add), std::move(mul), 0, static_cast<ElementId>(1 % n),
                    "Z/" + std::to_string(n));
}

namespace {

using Poly = std::vector<std::uint64_t>;  // constant term first, over Z/p

// Remainder of f modulo a monic g, both over Z/p.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = f.size(); i-- > dg;) {
    const std::uint64_t c = f[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[i - dg + j] = (f[i - dg + j] + p * p - c * g[j] % p) % p;
    }
  }
  f.resize(std::min(f.size(), dg));
  return f;
}

bool poly_is_zero(const Poly& f, std::uint64_t p) {
  return std::all_of(f.begin(), f.end(), [&](std::uint64_t c) { return c % p == 0; });
}

// Enumerates monic polynomials of degree d in increasing coefficient-vector
// order, constant term most significant.
template <class F>
bool for_each_monic(std::uint64_t p, std::uint64_t d, F&& f) {
  const std::size_t count = checked_pow(p, d);
  for (std::size_t t = 0; t < count; ++t) {
    Poly poly(d + 1, 0);
    poly[d] = 1;
    std::size_t rest = t;
    for (std::size_t i = d; i-- > 0;) {  // c_{d-1} least significant, c_0 most
      poly[i] = rest % p;
      rest /= p;
    }
    if (f(poly)) return true;
  }
  return false;
}

bool irreducible(const Poly& f, std::uint64_t p) {
  const std::uint64_t deg = f.size() - 1;
  for (std::uint64_t d = 1; d <= deg / 2; ++d) {
    const bool has_factor =
        for_each_monic(p, d, [&](const Poly& g) { return poly_is_zero(poly_mod(f, g, p), p); });
    if (has_factor) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (k == 0) throw InputError("field degree must be >= 1");
  Poly found;
  for_each_monic(p, k, [&](const Poly& f) {
    if (irreducible(f, p)) {
      found = f;
      return true;
    }
    return false;
  });
  return found;
}

namespace {
FiniteRing build_poly_quotient(const FiniteRing& base, std::span<const ElementId> modulus,
                               std::size_t order_cap);
}  // namespace

FiniteRing make_gf(std::uint64_t p, std::uint64_t k, std::size_t order_cap) {
  if (!is_prime(p)) throw InputError("GF(p,k) needs p prime, got " + std::to_string(p));
  if (k == 0) throw InputError("GF(p,k) needs k >= 1");
  const std::size_t q = checked_pow(p, k);
  check_cap(q, order_cap, "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
  if (k == 1) {
    FiniteRing prime = make_zmod(p, order_cap);
    prime.set_label("GF(" + std::to_string(p) + ")");
    return prime;
  }
  const Poly modulus = smallest_irreducible(p, k);
  std::vector<ElementId> mod_ids(modulus.begin(), modulus.end());
  FiniteRing field = build_poly_quotient(make_zmod(p, order_cap), mod_ids, order_cap);
  field.set_label(k == 1 ? "GF(" + std::to_string(p) + ")" : "GF(" + std::to_string(q) + ")");
  return field;
}

FiniteRing make_boolean(std::uint64_t k, std::size_t order_cap) {
  if (k >= 63) throw ResourceError("bool(k) order overflows", SIZE_MAX, order_cap);
  const std::size_t n = std::size_t{1} << k;
  check_cap(n, order_cap, "bool(" + std::to_string(k) + ")");
  std::vector<ElementId> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<ElementId>(a ^ b);
      mul[a * n + b] = static_cast<ElementId>(a & b);
    }
  }
  return FiniteRing(n, std::move(add), std::move(mul), 0, static_cast<ElementId>(n - 1),
                    "bool(" + std::to_string(k) + ")");
}

namespace {

FiniteRing build_poly_quotient(const FiniteRing& base, std::span<const ElementId> modulus,
                               std::size_t order_cap) {
  if (modulus.size() < 2) throw InputError("modulus must have degree >= 1");
  for (ElementId c : modulus) {
    if (c >= base.order()) throw InputError("modulus coefficient out of range");
  }
  if (modulus.back() != base.one()) throw InputError("modulus must be monic");
  const std::size_t b = base.order();
  const std::size_t d = modulus.size() - 1;
  const std::size_t n = checked_pow(b, d);
  check_cap(n, order_cap, base.label() + "[x]/(degree " + std::to_string(d) + ")");

  std::vector<std::vector<ElementId>> coeffs(n, std::vector<ElementId>(d));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t i = 0; i < d; ++i) {
      coeffs[x][i] = static_cast<ElementId>(rest % b);
      rest /= b;
    }
  }
  auto encode = [&](const std::vector<ElementId>& c) {
    std::size_t id = 0;
    for (std::size_t i = d; i-- > 0;) id = id * b + c[i];
    return static_cast<ElementId>(id);
  };

  std::vector<ElementId> add(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<ElementId> c(d);
      for (std::size_t i = 0; i < d; ++i) c[i] = base.add(coeffs[x][i], coeffs[y][i]);
      add[x * n + y] = encode(c);
    }
  }

  // shifted[i][y] = x^i * y reduced; scaled[c][y] = c * y coefficientwise.
  std::vector<std::vector<ElementId>> shifted(d, std::vector<ElementId>(n));
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<ElementId> c = coeffs[y];
    shifted[0][y] = static_cast<ElementId>(y);
    for (std::size_t i = 1; i < d; ++i) {
      // multiply by x: top coefficient wraps via x^d = -(m_0 + ... + m_{d-1} x^{d-1})
      const ElementId top = c[d - 1];
      for (std::size_t j = d - 1; j > 0; --j) c[j] = c[j - 1];
      c[0] = base.zero();
      for (std::size_t j = 0; j < d; ++j) c[j] = base.sub(c[j], base.mul(top, modulus[j]));
      shifted[i][y] = encode(c);
    }
  }
  std::vector<std::vector<ElementId>> scaled(b, std::vector<ElementId>(n));
  for (std::size_t s = 0; s < b; ++s) {
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<ElementId> c(d);
      for (std::size_t i = 0; i < d; ++i) c[i] = base.mul(static_cast<ElementId>(s), coeffs[y][i]);
      scaled[s][y] = encode(c);
    }
  }
  const ElementId zero_poly = encode(std::vector<ElementId>(d, base.zero()));
  std::vector<ElementId> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ElementId acc = zero_poly;
      for (std::size_t i = 0; i < d; ++i) {
        const ElementId c = coeffs[x][i];
        if (c == base.zero()) continue;
        acc = add[acc * n + scaled[c][shifted[i][y]]];
      }
      mul[x * n + y] = acc;
    }
  }
  std::vector<ElementId> one_c(d, base.zero());
  one_c[0] = base.one();
  std::string label = base.label() + "[x]/(";
  for (std::size_t i = modulus.size(); i-- > 0;) {
    label += std::to_string(modulus[i]) + (i > 0 ? "," : ")");
  }
  return FiniteRing(n, std::move(add), std::move(mul), zero_poly, encode(one_c), label);
}

}  // namespace

FiniteRing make_quotient_poly(const FiniteRing& base, std::span<const ElementId> modulus,
                              std::size_t order_cap) {
  if (base.order() > kPolyBaseOrderCap) {
    throw InputError("polynomial quotient base must have order <= " +
                     std::to_string(kPolyBaseOrderCap));
  }
  return build_poly_quotient(base, modulus, order_cap);
}

FiniteRing ring_product(const FiniteRing& r1, const FiniteRing& r2, std::size_t order_cap) {
  const std::size_t n1 = r1.order(), n2 = r2.order();
  if (n1 > order_cap / n2) {
    throw ResourceError("ring product order " + std::to_string(n1 * n2) + " exceeds cap " +
                            std::to_string(order_cap),
                        n1 * n2, order_cap);
  }
  const std::size_t n = n1 * n2;
  std::vector<ElementId> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto a1 = static_cast<ElementId>(a / n2), a2 = static_cast<ElementId>(a % n2);
    for (std::size_t b = 0; b < n; ++b) {
      const auto b1 = static_cast<ElementId>(b / n2), b2 = static_cast<ElementId>(b % n2);
      add[a * n + b] = static_cast<ElementId>(r1.add(a1, b1) * n2 + r2.add(a2, b2));
      mul[a * n + b] = static_cast<ElementId>(r1.mul(a1, b1) * n2 + r2.mul(a2, b2));
    }
  }
  return FiniteRing(n, std::move(add), std::move(mul),
                    static_cast<ElementId>(r1.zero() * n2 + r2.zero()),
                    static_cast<ElementId>(r1.one() * n2 + r2.one()),
                    r1.label() + " x " + r2.label());
}

FiniteSemigroup mult_semigroup(const FiniteRing& r) {
  const auto t = r.mul_table();
  return FiniteSemigroup(r.order(), std::vector<ElementId>(t.begin(), t.end()), "S(" + r.label() + ")");
}

// ---- ideals ---------------------------------------------------------------

bool is_ideal(const FiniteRing& r, const ElementSet& s) {
  if (s.owner_order() != r.order() || !s.contains(r.zero())) return false;
  const auto members = s.elements();
  for (ElementId x : members) {
    for (ElementId y : members)
      if (!s.contains(r.add(x, y))) return false;
    for (ElementId y = 0; y < r.order(); ++y)
      if (!s.contains(r.mul(x, y))) return false;
  }
  return true;
}

Ideal Ideal::verified(const FiniteRing& r, ElementSet elements) {
  if (!is_ideal(r, elements)) throw InputError("subset is not an ideal of " + r.label());
  return Ideal(std::move(elements));
}

Ideal ideal_generated(const FiniteRing& r, std::span<const ElementId> generators) {
  ElementSet spanning(r.order());
  for (ElementId g : generators) {
    if (g >= r.order()) throw InputError("generator id out of range");
    for (ElementId x = 0; x < r.order(); ++x) spanning.insert(r.mul(x, g));
  }
  // Additive closure of a union of principal ideals is their sum.
  const auto steps = spanning.elements();
  ElementSet out(r.order());
  out.insert(r.zero());
  std::vector<ElementId> queue{r.zero()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElementId s : steps) {
      const ElementId y = r.add(queue[i], s);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return trusted_ideal(std::move(out));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  return trusted_ideal(a.elements() & b.elements());
}

Ideal ideal_sum(const FiniteRing& r, const Ideal& a, const Ideal& b) {
  ElementSet out(r.order());
  const auto eb = b.elements().elements();
  a.elements().for_each([&](ElementId x) {
    for (ElementId y : eb) out.insert(r.add(x, y));
  });
  return trusted_ideal(std::move(out));
}

// ---- structure ------------------------------------------------------------

ElementSet units(const FiniteRing& r) {
  ElementSet u(r.order());
  for (ElementId x = 0; x < r.order(); ++x) {
    for (ElementId y = 0; y < r.order(); ++y) {
      if (r.mul(x, y) == r.one()) {
        u.insert(x);
        break;
      }
    }
  }
  return u;
}

Ideal nilradical(const FiniteRing& r) {
  // x^(2^k) = 0 for 2^k >= order exactly when x is nilpotent, since a
  // nilpotency index never exceeds the order.
  unsigned squarings = 0;
  while ((std::size_t{1} << squarings) < r.order()) ++squarings;
  ElementSet nil(r.order());
  for (ElementId x = 0; x < r.order(); ++x) {
    ElementId y = x;
    for (unsigned i = 0; i < squarings; ++i) y = r.mul(y, y);
    if (y == r.zero()) nil.insert(x);
  }
  return trusted_ideal(std::move(nil));
}

std::vector<ElementId> primitive_idempotents(const FiniteRing& r) {
  std::vector<ElementId> idem;
  for (ElementId x = 0; x < r.order(); ++x)
    if (r.mul(x, x) == x && x != r.zero()) idem.push_back(x);
  std::vector<ElementId> out;
  for (ElementId e : idem) {
    const bool minimal = std::none_of(idem.begin(), idem.end(), [&](ElementId f) {
      return f != e && r.mul(e, f) == f;  // f < e
    });
    if (minimal) out.push_back(e);
  }
  return out;
}

std::vector<MaximalIdeal> maximal_ideals(const FiniteRing& r) {
  if (r.order() < 2) throw InputError("the zero ring has no maximal ideals");
  std::vector<MaximalIdeal> out;
  for (ElementId e : primitive_idempotents(r)) {
    ElementSet factor(r.order());
    for (ElementId x = 0; x < r.order(); ++x) factor.insert(r.mul(x, e));
    ElementSet factor_units(r.order());
    factor.for_each([&](ElementId z) {
      for (ElementId y = 0; y < r.order(); ++y) {
        if (r.mul(z, y) == e) {
          factor_units.insert(z);
          break;
        }
      }
    });
    ElementSet m(r.order());
    for (ElementId x = 0; x < r.order(); ++x)
      if (!factor_units.contains(r.mul(x, e))) m.insert(x);
    const std::uint64_t index = r.order() / m.size();
    out.push_back({trusted_ideal(std::move(m)), index, e});
  }
  std::sort(out.begin(), out.end(), [](const MaximalIdeal& a, const MaximalIdeal& b) {
    if (a.index != b.index) return a.index < b.index;
    return ids_less(a.ideal.elements(), b.ideal.elements());
  });
  return out;
}

Ideal jacobson_radical(const FiniteRing& r) {
  if (r.order() < 2) throw InputError("the zero ring has no Jacobson radical to compute");
  const ElementSet u = units(r);
  ElementSet j(r.order());
  for (ElementId x = 0; x < r.order(); ++x) {
    bool quasi_regular = true;
    for (ElementId y = 0; y < r.order() && quasi_regular; ++y)
      quasi_regular = u.contains(r.add(r.one(), r.mul(y, x)));
    if (quasi_regular) j.insert(x);
  }
  return trusted_ideal(std::move(j));
}

Ideal intersection_of(const FiniteRing& r, std::span<const MaximalIdeal> ideals) {
  ElementSet acc = ElementSet::full(r.order());
  for (const auto& m : ideals) acc &= m.ideal.elements();
  return trusted_ideal(std::move(acc));
}

Quotient quotient_ring(const FiniteRing& r, const Ideal& ideal) {
  if (!is_ideal(r, ideal.elements())) throw InputError("subset is not an ideal of " + r.label());
  const std::size_t n = r.order();
  const auto members = ideal.elements().elements();
  std::vector<ElementId> rep(n);
  for (ElementId x = 0; x < n; ++x) {
    ElementId best = x;
    for (ElementId i : members) best = std::min(best, r.add(x, i));
    rep[x] = best;
  }
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<ElementId> coset_of_rep(n, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) coset_of_rep[reps[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> projection(n);
  for (ElementId x = 0; x < n; ++x) projection[x] = coset_of_rep[rep[x]];

  const std::size_t m = reps.size();
  std::vector<ElementId> add(m * m), mul(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      add[a * m + b] = projection[r.add(reps[a], reps[b])];
      mul[a * m + b] = projection[r.mul(reps[a], reps[b])];
    }
  }
  FiniteRing q(m, std::move(add), std::move(mul), projection[r.zero()], projection[r.one()],
               r.label() + " / I(" + std::to_string(members.size()) + ")");
  return {std::move(q), std::move(projection)};
}

bool is_boolean(const FiniteRing& r) {
  for (ElementId x = 0; x < r.order(); ++x)
    if (r.mul(x, x) != x) return false;
  return true;
}

std::uint64_t FieldDescriptor::order() const { return checked_pow(characteristic, degree); }

std::optional<std::vector<FieldDescriptor>> semisimple_decomposition(const FiniteRing& r) {
  if (jacobson_radical(r).size() != 1) return std::nullopt;
  std::vector<FieldDescriptor> fields;
  for (ElementId e : primitive_idempotents(r)) {
    std::uint64_t characteristic = 1;
    for (ElementId x = e; x != r.zero(); x = r.add(x, e)) ++characteristic;
    ElementSet factor(r.order());
    for (ElementId x = 0; x < r.order(); ++x) factor.insert(r.mul(x, e));
    std::uint64_t degree = 0;
    std::size_t q = factor.size();
    while (q > 1 && q % characteristic == 0) {
      q /= characteristic;
      ++degree;
    }
    if (q != 1) throw InternalError("local factor order is not a power of its characteristic");
    fields.push_back({characteristic, degree});
  }
  std::sort(fields.begin(), fields.end(), [](const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.characteristic != b.characteristic ? a.characteristic < b.characteristic
                                                : a.degree < b.degree;
  });
  return fields;
}

CRTCertificate claim_b_sequence(const FiniteRing& r) {
  CRTCertificate cert;
  if (r.order() < 2) return cert;  // zero ring: t = 0
  for (auto& m : maximal_ideals(r)) {
    if (m.index <= 2) continue;
    const ElementSet& mset = m.ideal.elements();
    ElementId b = 0;
    bool found = false;
    for (ElementId x = 0; x < r.order() && !found; ++x) {
      if (!mset.contains(x) && !mset.contains(r.sub(r.mul(x, x), x))) {
        b = x;
        found = true;
      }
    }
    if (!found) throw InternalError("no non-idempotent unit modulo an ideal of index > 2");
    const ElementId e = m.primitive_idempotent;
    const ElementId a = r.add(r.mul(b, e), r.sub(r.one(), e));
    cert.residues.push_back({cert.ideals_used.size(), m.index, b});
    cert.sequence.push_back(a);
    cert.ideals_used.push_back(std::move(m));
  }
  cert.verified_free = is_free(mult_semigroup(r), cert.sequence);
  cert.lower_bound = cert.verified_free ? cert.sequence.size() + 1 : 1;
  return cert;
}

StructureReport analyze(const FiniteRing& r) {
  if (r.order() < 2) throw InputError("structure analysis needs a nonzero ring");
  const FiniteSemigroup s = mult_semigroup(r);
  std::vector<MaximalIdeal> maxes = maximal_ideals(r);
  Ideal j = jacobson_radical(r);
  Ideal nil = nilradical(r);
  if (!(j == nil) || !(j == intersection_of(r, maxes))) {
    throw InternalError("radical computations disagree for " + r.label());
  }
  StructureReport rep{idempotent_set(s), units(r), j, nil, std::move(maxes), 0, 0,
                      is_boolean(r), std::nullopt};
  for (const auto& m : rep.maximal_ideals) {
    if (m.index == 2) {
      ++rep.index_two_count;
    } else {
      ++rep.index_gt_two_count;
    }
  }
  if (j.size() == 1) rep.semisimple_factors = semisimple_decomposition(r);
  return rep;
}

}  // namespace ebc
