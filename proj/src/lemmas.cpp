#include "ebc/lemmas.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "ebc/ring.hpp"
#include "ebc/semigroup.hpp"

namespace ebc {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

constexpr std::size_t kMaxNotes = 5;

class Property {
 public:
  explicit Property(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::string& subject, const std::string& detail) {
    ++r_.instances;
    if (ok) return;
    ++r_.failures;
    if (r_.notes.size() < kMaxNotes) r_.notes.push_back(subject + ": " + detail);
  }
  PropertyResult result() const { return r_; }

 private:
  PropertyResult r_;
};

struct Case {
  const CorpusEntry* entry;
  std::string name;
  FiniteRing ring;
  FiniteSemigroup sg;
  std::optional<EBResult> eb;  // when order <= eb_cap
};

std::string seq_text(std::span<const ElementId> seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
  return out + ")";
}

ElementSet random_subset(std::mt19937_64& rng, std::size_t order, std::size_t max_count) {
  std::uniform_int_distribution<std::size_t> count(1, max_count);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(order - 1));
  ElementSet out(order);
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) out.insert(pick(rng));
  return out;
}

// x -> (x mod I, x mod J) from R/(I n J) to R/I x R/J.
bool crt_isomorphism(const FiniteRing& r, const Ideal& a, const Ideal& b, std::string& why) {
  if (ideal_sum(r, a, b).size() != r.order()) {
    why = "ideals are not coprime";
    return false;
  }
  const Quotient qk = quotient_ring(r, ideal_intersection(a, b));
  const Quotient qa = quotient_ring(r, a);
  const Quotient qb = quotient_ring(r, b);
  const FiniteRing prod = ring_product(qa.ring, qb.ring);
  const std::size_t nb = qb.ring.order();
  const std::size_t n = qk.ring.order();
  std::vector<ElementId> phi(n, ~ElementId{0});
  for (ElementId x = 0; x < r.order(); ++x) {
    const auto img = static_cast<ElementId>(qa.projection[x] * nb + qb.projection[x]);
    ElementId& slot = phi[qk.projection[x]];
    if (slot != ~ElementId{0} && slot != img) {
      why = "map is not well defined";
      return false;
    }
    slot = img;
  }
  std::vector<bool> hit(prod.order(), false);
  for (ElementId y : phi) hit[y] = true;
  if (n != prod.order() || std::find(hit.begin(), hit.end(), false) != hit.end()) {
    why = "map is not bijective";
    return false;
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (phi[qk.ring.add(x, y)] != prod.add(phi[x], phi[y]) ||
          phi[qk.ring.mul(x, y)] != prod.mul(phi[x], phi[y])) {
        why = "map is not a ring homomorphism";
        return false;
      }
    }
  }
  if (phi[qk.ring.one()] != prod.one()) {
    why = "map does not preserve one";
    return false;
  }
  return true;
}

bool maps_idempotents(const FiniteSemigroup& s, const FiniteSemigroup& t,
                      std::span<const ElementId> map) {
  const ElementSet es = idempotent_set(s);
  const ElementSet et = idempotent_set(t);
  bool ok = true;
  es.for_each([&](ElementId e) { ok = ok && et.contains(map[e]); });
  return ok;
}

FiniteRing field_product(std::span<const FieldDescriptor> fields) {
  std::optional<FiniteRing> acc;
  for (const auto& f : fields) {
    if (f.order() <= 2) continue;
    FiniteRing k = make_gf(f.characteristic, f.degree);
    acc = acc ? ring_product(*acc, k) : std::move(k);
  }
  return acc ? std::move(*acc) : make_zmod(1);
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text, const std::string& source,
                                      std::size_t cap) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (body.empty()) continue;
    const std::string where = source + ":" + std::to_string(line) + ": ";
    try {
      dsl::ExprPtr e = dsl::parse(body);
      const std::size_t order = dsl::expr_order(*e);
      if (order > cap) {
        throw ResourceError("order " + std::to_string(order) + " exceeds cap " + std::to_string(cap),
                            order, cap);
      }
      out.push_back(CorpusEntry{body, std::move(e), source, line});
    } catch (const Error& err) {
      throw InputError(where + err.what());
    }
  }
  return out;
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<std::string> base;
  std::vector<bool> in_products;
  auto add = [&](std::string s, bool factor) {
    base.push_back(std::move(s));
    in_products.push_back(factor);
  };
  for (int n = 1; n <= 30; ++n) add("Z/" + std::to_string(n), n > 1);
  for (int k = 1; k <= 3; ++k) add("bool(" + std::to_string(k) + ")", k > 1);
  for (int q = 2; q <= 16; ++q)
    if (is_prime_power(static_cast<std::uint64_t>(q)))
      add("GF(" + std::to_string(q) + ")", !is_prime(static_cast<std::uint64_t>(q)));

  std::vector<std::string> all = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!in_products[i]) continue;
    for (std::size_t j = i; j < base.size(); ++j) {
      if (!in_products[j]) continue;
      const auto a = dsl::expr_order(*dsl::parse(base[i]));
      const auto b = dsl::expr_order(*dsl::parse(base[j]));
      if (a * b <= 64) all.push_back(base[i] + " x " + base[j]);
    }
  }
  std::vector<CorpusEntry> out;
  for (auto& s : all) {
    dsl::ExprPtr e = dsl::parse(s);
    out.push_back(CorpusEntry{std::move(s), std::move(e), "default", 0});
  }
  return out;
}

bool VerifySummary::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed(); });
}

VerifySummary verify_lemmas(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  auto solve = [&](const FiniteSemigroup& s) { return erdos_burgess(s, opts.search); };

  std::vector<Case> cases;
  cases.reserve(corpus.size());
  for (const auto& entry : corpus) {
    FiniteRing r = dsl::elaborate(*entry.expr);
    FiniteSemigroup s = mult_semigroup(r);
    std::optional<EBResult> eb;
    if (r.order() <= opts.eb_cap) eb = solve(s);
    cases.push_back(Case{&entry, dsl::pretty(*entry.expr), std::move(r), std::move(s), std::move(eb)});
  }

  Property sg_axioms("semigroup_axioms"), ring_axioms("ring_axioms"), ghw("ghw_bound"),
      witness("witness_free"), oracle("oracle_equivalence"), perm("permutation_invariance"),
      radicals("radical_agreement"), index_pp("maximal_index_prime_power"),
      semisimple("semisimple_iff_zero_radical"), boolq("boolean_quotient"), crt("crt_coprime"),
      epi("quotient_epimorphism"), crt_free("crt_sequence_free"),
      dprod("direct_product_idempotents"), closure_idem("closure_idempotent"),
      sub_mono("subsemigroup_monotonicity"), quo_mono("quotient_monotonicity"),
      groups("unit_group_davenport"), boolean_factor("boolean_factor_irrelevance");

  for (const Case& c : cases) {
    const FiniteRing& r = c.ring;
    const FiniteSemigroup& s = c.sg;
    const std::size_t n = r.order();

    const AxiomReport ax = check_axioms(s, opts.seed);
    sg_axioms.check(ax.associative && ax.commutative, c.name, "multiplicative table fails axioms");
    ring_axioms.check(check_ring_axioms(r, opts.seed).ok(), c.name, "ring tables fail axioms");

    if (c.eb) {
      const EBResult& eb = *c.eb;
      ghw.check(eb.value <= ghw_bound(s), c.name,
                "I = " + std::to_string(eb.value) + " > " + std::to_string(ghw_bound(s)));
      const auto& w = eb.extremal_sequence;
      witness.check(w.size() + 1 == eb.value && std::is_sorted(w.begin(), w.end()) && is_free(s, w),
                    c.name, "witness " + seq_text(w));
      if (n <= opts.oracle_cap) {
        const auto o = erdos_burgess_oracle(s);
        oracle.check(o == eb.value, c.name,
                     "solver " + std::to_string(eb.value) + ", oracle " + std::to_string(o));
      }
      std::vector<ElementId> seq = w;
      const ElementSet extra = random_subset(rng, n, 4);
      const auto more = extra.elements();
      seq.insert(seq.end(), more.begin(), more.end());
      std::vector<ElementId> shuffled = seq;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      std::vector<ElementId> reversed(seq.rbegin(), seq.rend());
      const bool f = is_free(s, seq);
      perm.check(f == is_free(s, shuffled) && f == is_free(s, reversed), c.name,
                 "freeness of " + seq_text(seq) + " depends on order");
    }

    {
      const ElementSet gens = random_subset(rng, n, 3);
      const Subsemigroup once = subsemigroup_closure(s, gens);
      ElementSet all(once.semigroup.order());
      for (ElementId x = 0; x < all.owner_order(); ++x) all.insert(x);
      const Subsemigroup twice = subsemigroup_closure(once.semigroup, all);
      closure_idem.check(twice.semigroup == once.semigroup, c.name, "closing a closure changed it");
    }

    if (const auto* prod = std::get_if<dsl::Product>(&c.entry->expr->node)) {
      const FiniteRing a = dsl::elaborate(*prod->left);
      const FiniteRing b = dsl::elaborate(*prod->right);
      const FiniteSemigroup sab = direct_product(mult_semigroup(a), mult_semigroup(b));
      const ElementSet ea = idempotent_set(mult_semigroup(a));
      const ElementSet eb = idempotent_set(mult_semigroup(b));
      ElementSet expect(sab.order());
      ea.for_each([&](ElementId x) {
        eb.for_each([&](ElementId y) {
          expect.insert(static_cast<ElementId>(x * b.order() + y));
        });
      });
      dprod.check(sab == s && idempotent_set(sab) == expect, c.name,
                  "idempotents of the product do not factor");
    }

    if (n < 2) continue;  // the zero ring has no maximal ideals

    const auto maxes = maximal_ideals(r);
    const Ideal jac = jacobson_radical(r);
    const Ideal nil = nilradical(r);
    const Ideal meet = intersection_of(r, maxes);
    radicals.check(jac == nil && nil == meet, c.name,
                   "|J| = " + std::to_string(jac.size()) + ", |nil| = " + std::to_string(nil.size()) +
                       ", |meet| = " + std::to_string(meet.size()));

    std::size_t big = 0;
    std::vector<MaximalIdeal> index_two;
    for (const auto& m : maxes) {
      const bool ok = m.index * m.ideal.size() == n && is_prime_power(m.index) &&
                      quotient_ring(r, m.ideal).ring.order() == m.index;
      index_pp.check(ok, c.name, "maximal ideal of index " + std::to_string(m.index));
      if (m.index == 2) index_two.push_back(m);
      if (m.index > 2) ++big;
    }

    const auto decomposition = semisimple_decomposition(r);
    {
      bool ok = decomposition.has_value() == (jac.size() == 1);
      if (decomposition) {
        std::uint64_t prod = 1;
        for (const auto& f : *decomposition) prod *= f.order();
        ok = ok && prod == n;
      }
      semisimple.check(ok, c.name, "decomposition disagrees with J(R)");
    }

    if (!index_two.empty()) {
      const Quotient q = quotient_ring(r, intersection_of(r, index_two));
      boolq.check(is_boolean(q.ring), c.name, "quotient by the index-2 ideals is not Boolean");
    }

    {
      constexpr std::size_t kMaxPairs = 10;
      std::size_t pairs = 0;
      for (std::size_t i = 0; i < maxes.size() && pairs < kMaxPairs; ++i) {
        for (std::size_t j = i + 1; j < maxes.size() && pairs < kMaxPairs; ++j, ++pairs) {
          std::string why;
          const bool ok = crt_isomorphism(r, maxes[i].ideal, maxes[j].ideal, why);
          crt.check(ok, c.name, why);
        }
      }
    }

    {
      std::vector<Ideal> ideals{jac};
      for (const auto& m : maxes) ideals.push_back(m.ideal);
      for (const Ideal& i : ideals) {
        const Quotient q = quotient_ring(r, i);
        const FiniteSemigroup t = mult_semigroup(q.ring);
        epi.check(is_epimorphism(s, t, q.projection) && maps_idempotents(s, t, q.projection),
                  c.name, "projection modulo an ideal of size " + std::to_string(i.size()));
      }
    }

    {
      const CRTCertificate cert = claim_b_sequence(r);
      bool ok = cert.verified_free && cert.sequence.size() == big &&
                cert.lower_bound == big + 1 && is_free(s, cert.sequence);
      if (c.eb) ok = ok && c.eb->value >= cert.lower_bound;
      crt_free.check(ok, c.name, "certificate " + seq_text(cert.sequence));
    }

    if (c.eb) {
      const ElementSet u = units(r);
      const Subsemigroup ug = restrict_to(s, u, "U(" + c.name + ")");
      const auto inv = abelian_invariants(ug.semigroup);
      const auto closed = davenport_closed_form(inv);
      const std::uint64_t d = davenport(ug.semigroup, opts.search);
      bool ok = d <= c.eb->value;
      if (closed) ok = ok && d == *closed;
      if (decomposition && decomposition->size() == 1) ok = ok && d == c.eb->value;
      groups.check(ok, c.name, "D(U) = " + std::to_string(d));

      if (decomposition) {
        const FiniteRing f = field_product(*decomposition);
        const auto v = solve(mult_semigroup(f)).value;
        boolean_factor.check(v == c.eb->value, c.name,
                             "I = " + std::to_string(c.eb->value) + " but " + std::to_string(v) +
                                 " without Boolean factors");
      }
    }
  }

  // Seeded random closures and quotients, drawn over the corpus.
  std::vector<const Case*> solved, small;
  for (const Case& c : cases) {
    if (!c.eb) continue;
    solved.push_back(&c);
    if (c.ring.order() <= opts.quotient_order_cap && c.ring.order() >= 2) small.push_back(&c);
  }
  if (!solved.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, solved.size() - 1);
    for (std::size_t k = 0; k < opts.random_closures; ++k) {
      const Case& c = *solved[pick(rng)];
      const Subsemigroup sub = subsemigroup_closure(c.sg, random_subset(rng, c.sg.order(), 3));
      const auto v = solve(sub.semigroup).value;
      sub_mono.check(v <= c.eb->value, c.name,
                     "closure of order " + std::to_string(sub.semigroup.order()) + " has I = " +
                         std::to_string(v));
    }
  }
  if (!small.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    for (std::size_t k = 0; k < opts.random_quotients; ++k) {
      const Case& c = *small[pick(rng)];
      const auto gens = random_subset(rng, c.ring.order(), 2).elements();
      const Quotient q = quotient_ring(c.ring, ideal_generated(c.ring, gens));
      const FiniteSemigroup t = mult_semigroup(q.ring);
      const auto v = solve(t).value;
      quo_mono.check(v <= c.eb->value && is_epimorphism(c.sg, t, q.projection), c.name,
                     "quotient by the ideal generated by " + seq_text(gens) + " has I = " +
                         std::to_string(v));
    }
  }

  VerifySummary out;
  out.instances = corpus.size();
  for (const Property* p : {&sg_axioms, &ring_axioms, &ghw, &witness, &oracle, &perm, &radicals,
                            &index_pp, &semisimple, &boolq, &crt, &epi, &crt_free, &dprod,
                            &closure_idem, &sub_mono, &quo_mono, &groups, &boolean_factor}) {
    out.properties.push_back(p->result());
  }
  return out;
}

}  // namespace ebc
