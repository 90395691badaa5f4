#include "ebc/ebc.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <map>
#include <optional>
#include <string>

#include "ebc/dsl.hpp"
#include "ebc/errors.hpp"
#include "ebc/lemmas.hpp"
#include "ebc/report.hpp"
#include "ebc/ring.hpp"
#include "ebc/semigroup.hpp"
#include "ebc/solver.hpp"

struct ebc_ring {
  ebc::FiniteRing ring;
  std::string label;
  std::optional<ebc::dsl::ExprPtr> expr;
};

struct ebc_semigroup {
  ebc::FiniteSemigroup sg;
};

namespace {

using ebc::report::Json;

thread_local std::string g_last_error;

constexpr const char* kVersion = "0.3.0";

ebc_options defaults() {
  ebc_options o;
  ebc_options_init(&o);
  return o;
}

const ebc_options& opts_or_default(const ebc_options* o) {
  thread_local ebc_options d;
  if (o != nullptr) return *o;
  d = defaults();
  return d;
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs f, translating exceptions into a status and the thread's last error.
template <class F>
ebc_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const ebc::ResourceError& e) {
    g_last_error = e.what();
    return EBC_RESOURCE_ERROR;
  } catch (const ebc::InputError& e) {
    g_last_error = e.what();
    return EBC_INPUT_ERROR;
  } catch (const ebc::InternalError& e) {
    g_last_error = std::string("internal: ") + e.what();
    return EBC_INTERNAL_ERROR;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("bad JSON: ") + e.what();
    return EBC_INPUT_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return EBC_RESOURCE_ERROR;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal: ") + e.what();
    return EBC_INTERNAL_ERROR;
  }
}

ebc_status require(const void* p, const char* what) {
  if (p != nullptr) return EBC_OK;
  g_last_error = std::string(what) + " must not be NULL";
  return EBC_INPUT_ERROR;
}

class Clock {
 public:
  void phase(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    ms_[name] += std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  const std::map<std::string, double>& ms() const { return ms_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::map<std::string, double> ms_;
};

ebc::SearchConfig search_config(const ebc_options& o) {
  ebc::SearchConfig c;
  c.depth_budget = o.depth_budget;
  c.memo_capacity = o.memo_capacity;
  c.parallel_width = o.threads == 0 ? 1 : o.threads;
  return c;
}

std::vector<ebc::ElementId> read_table(const Json& j, const char* key, std::size_t order) {
  if (!j.contains(key)) throw ebc::InputError(std::string("table JSON lacks \"") + key + "\"");
  const Json& t = j.at(key);
  std::vector<ebc::ElementId> out;
  out.reserve(order * order);
  auto take = [&](const Json& v) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        static_cast<std::size_t>(v.get<std::int64_t>()) >= order) {
      throw ebc::InputError(std::string("\"") + key + "\" entry " + v.dump() + " is not an element id");
    }
    out.push_back(static_cast<ebc::ElementId>(v.get<std::int64_t>()));
  };
  if (!t.is_array()) throw ebc::InputError(std::string("\"") + key + "\" must be an array");
  if (t.size() == order && order > 0 && t.front().is_array()) {
    for (const Json& row : t) {
      if (!row.is_array() || row.size() != order) {
        throw ebc::InputError(std::string("\"") + key + "\" rows must have length " +
                              std::to_string(order));
      }
      for (const Json& v : row) take(v);
    }
  } else {
    if (t.size() != order * order) {
      throw ebc::InputError(std::string("\"") + key + "\" must have order^2 = " +
                            std::to_string(order * order) + " entries");
    }
    for (const Json& v : t) take(v);
  }
  return out;
}

std::size_t read_order(const Json& j, std::size_t cap) {
  if (!j.is_object() || !j.contains("order") || !j.at("order").is_number_integer()) {
    throw ebc::InputError("table JSON needs an integer \"order\"");
  }
  const auto n = j.at("order").get<std::int64_t>();
  if (n < 1) throw ebc::InputError("\"order\" must be positive");
  if (static_cast<std::size_t>(n) > cap) {
    throw ebc::ResourceError("table order " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap),
                             static_cast<std::size_t>(n), cap);
  }
  return static_cast<std::size_t>(n);
}

void check_eb_cap(std::size_t order, const ebc_options& o) {
  if (order > o.eb_cap) {
    throw ebc::ResourceError("order " + std::to_string(order) + " exceeds the solver cap " +
                                 std::to_string(o.eb_cap),
                             order, o.eb_cap);
  }
}

Json structure_or_null(const ebc::FiniteRing& r) {
  if (r.order() < 2) return nullptr;  // the zero ring has no maximal ideals
  return ebc::report::structure(ebc::analyze(r));
}

std::vector<std::uint64_t> parse_group_spec(const std::string& spec) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = spec.find(',', pos);
    const std::string tok = spec.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (tok.empty() || tok.size() > 12 || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw ebc::InputError("group spec '" + spec + "': expected positive integers separated by commas");
    }
    const std::uint64_t d = std::stoull(tok);
    if (d == 0) throw ebc::InputError("group spec '" + spec + "': invariant factor 0");
    if (!out.empty() && d % out.back() != 0) {
      throw ebc::InputError("group spec '" + spec + "': " + std::to_string(out.back()) +
                            " does not divide " + std::to_string(d));
    }
    out.push_back(d);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

extern "C" {

void ebc_options_init(ebc_options* o) {
  if (o == nullptr) return;
  o->structure_cap = ebc::kStructureOrderCap;
  o->eb_cap = 128;
  o->depth_budget = 0;
  o->threads = 1;
  o->memo_capacity = std::size_t{1} << 22;
  o->seed = 0;
  o->stats = 0;
}

const char* ebc_version(void) { return kVersion; }

const char* ebc_last_error(void) { return g_last_error.c_str(); }

void ebc_string_free(char* s) { std::free(s); }

ebc_status ebc_ring_parse(const char* expr, const ebc_options* opts, ebc_ring** out) {
  if (auto st = require(out, "out"); st != EBC_OK) return st;
  *out = nullptr;
  if (auto st = require(expr, "expr"); st != EBC_OK) return st;
  return guarded([&] {
    const ebc_options& o = opts_or_default(opts);
    ebc::dsl::ExprPtr e = ebc::dsl::parse(expr);
    ebc::FiniteRing r = ebc::dsl::elaborate(*e, o.structure_cap);
    std::string label = ebc::dsl::pretty(*e);
    *out = new ebc_ring{std::move(r), std::move(label), std::move(e)};
    return EBC_OK;
  });
}

ebc_status ebc_ring_from_json(const char* json, const ebc_options* opts, ebc_ring** out) {
  if (auto st = require(out, "out"); st != EBC_OK) return st;
  *out = nullptr;
  if (auto st = require(json, "json"); st != EBC_OK) return st;
  return guarded([&] {
    const ebc_options& o = opts_or_default(opts);
    const Json j = Json::parse(json);
    const std::size_t n = read_order(j, o.structure_cap);
    auto add = read_table(j, "add", n);
    auto mul = read_table(j, "mul", n);
    std::string label = "table(" + std::to_string(n) + ")";
    ebc::FiniteRing r = ebc::ring_from_tables(n, std::move(add), std::move(mul), label, o.seed);
    *out = new ebc_ring{std::move(r), std::move(label), std::nullopt};
    return EBC_OK;
  });
}

size_t ebc_ring_order(const ebc_ring* r) { return r == nullptr ? 0 : r->ring.order(); }

const char* ebc_ring_label(const ebc_ring* r) { return r == nullptr ? "" : r->label.c_str(); }

void ebc_ring_free(ebc_ring* r) { delete r; }

ebc_status ebc_semigroup_from_json(const char* json, const ebc_options* opts,
                                   ebc_semigroup** out) {
  if (auto st = require(out, "out"); st != EBC_OK) return st;
  *out = nullptr;
  if (auto st = require(json, "json"); st != EBC_OK) return st;
  return guarded([&] {
    const ebc_options& o = opts_or_default(opts);
    const Json j = Json::parse(json);
    const std::size_t n = read_order(j, o.structure_cap);
    ebc::FiniteSemigroup s(n, read_table(j, "mul", n), "table(" + std::to_string(n) + ")");
    const ebc::AxiomReport ax = ebc::check_axioms(s, o.seed);
    if (!ax.commutative) throw ebc::InputError("multiplication table is not commutative");
    if (!ax.associative) throw ebc::InputError("multiplication table is not associative");
    *out = new ebc_semigroup{std::move(s)};
    return EBC_OK;
  });
}

ebc_status ebc_semigroup_of_ring(const ebc_ring* r, ebc_semigroup** out) {
  if (auto st = require(out, "out"); st != EBC_OK) return st;
  *out = nullptr;
  if (auto st = require(r, "ring"); st != EBC_OK) return st;
  return guarded([&] {
    *out = new ebc_semigroup{ebc::mult_semigroup(r->ring)};
    return EBC_OK;
  });
}

size_t ebc_semigroup_order(const ebc_semigroup* s) { return s == nullptr ? 0 : s->sg.order(); }

void ebc_semigroup_free(ebc_semigroup* s) { delete s; }

ebc_status ebc_analyze(const ebc_ring* r, const ebc_options* opts, char** report) {
  if (auto st = require(report, "report"); st != EBC_OK) return st;
  *report = nullptr;
  if (auto st = require(r, "ring"); st != EBC_OK) return st;
  return guarded([&] {
    const ebc_options& o = opts_or_default(opts);
    Clock clock;
    if (r->ring.order() < 2) throw ebc::InputError("the zero ring has no maximal ideals");
    Json j = ebc::report::header(r->label, r->ring.order());
    j["structure"] = ebc::report::structure(ebc::analyze(r->ring));
    clock.phase("structure");
    if (o.stats) j["timings"] = ebc::report::timings(clock.ms());
    *report = to_c_string(ebc::report::dump(j));
    return EBC_OK;
  });
}

ebc_status ebc_eb_ring(const ebc_ring* r, const ebc_options* opts, char** report) {
  if (auto st = require(report, "report"); st != EBC_OK) return st;
  *report = nullptr;
  if (auto st = require(r, "ring"); st != EBC_OK) return st;
  return guarded([&] {
    const ebc_options& o = opts_or_default(opts);
    check_eb_cap(r->ring.order(), o);
    Clock clock;
    Json j = ebc::report::header(r->label, r->ring.order());
    j["structure"] = structure_or_null(r->ring);
    clock.phase("structure");
    const ebc::EBResult res = ebc::erdos_burgess(ebc::mult_semigroup(r->ring), search_config(o));
    clock.phase("search");
    j["eb"] = ebc::report::eb(res, o.depth_budget, o.stats != 0);
    if (o.stats) j["timings"] = ebc::report::timings(clock.ms());
    *report = to_c_string(ebc::report::dump(j));
    return res.exceeds_budget ? EBC_BUDGET_EXCEEDED : EBC_OK;
  });
}

ebc_status ebc_eb_semigroup(const ebc_semigroup* s, const ebc_options* opts, char** report) {
  if (auto st = require(report, "report"); st != EBC_OK) return st;
  *report = nullptr;
  if (auto st = require(s, "semigroup"); st != EBC_OK) return st;
  return guarded([&] {
    const ebc_options& o = opts_or_default(opts);
    check_eb_cap(s->sg.order(), o);
    Clock clock;
    Json j;
    j["schema_version"] = ebc::report::kSchemaVersion;
    j["semigroup"] = s->sg.label();
    j["order"] = s->sg.order();
    const ebc::EBResult res = ebc::erdos_burgess(s->sg, search_config(o));
    clock.phase("search");
    j["eb"] = ebc::report::eb(res, o.depth_budget, o.stats != 0);
    if (o.stats) j["timings"] = ebc::report::timings(clock.ms());
    *report = to_c_string(ebc::report::dump(j));
    return res.exceeds_budget ? EBC_BUDGET_EXCEEDED : EBC_OK;
  });
}

ebc_status ebc_davenport(const char* group_spec, const ebc_options* opts, char** report) {
  if (auto st = require(report, "report"); st != EBC_OK) return st;
  *report = nullptr;
  if (auto st = require(group_spec, "group_spec"); st != EBC_OK) return st;
  return guarded([&] {
    const ebc_options& o = opts_or_default(opts);
    const auto factors = parse_group_spec(group_spec);
    std::size_t order = 1;
    for (auto d : factors) {
      if (d > o.eb_cap || order * d > o.eb_cap) {
        throw ebc::ResourceError("group order exceeds the solver cap " + std::to_string(o.eb_cap),
                                 order * d, o.eb_cap);
      }
      order *= d;
    }
    Clock clock;
    const ebc::FiniteSemigroup g = ebc::abelian_group(factors, o.eb_cap);
    const ebc::EBResult res = ebc::erdos_burgess(g, search_config(o));
    clock.phase("search");
    const auto closed = ebc::davenport_closed_form(factors);

    Json j;
    j["schema_version"] = ebc::report::kSchemaVersion;
    j["group"] = g.label();
    j["invariant_factors"] = factors;
    j["order"] = g.order();
    j["eb"] = ebc::report::eb(res, o.depth_budget, o.stats != 0);
    if (res.exceeds_budget) {
      j["davenport"] = nullptr;
    } else {
      j["davenport"] = res.value;
    }
    j["closed_form"] = closed ? Json(*closed) : Json(nullptr);
    if (closed && !res.exceeds_budget) j["closed_form_agrees"] = *closed == res.value;
    if (o.stats) j["timings"] = ebc::report::timings(clock.ms());
    *report = to_c_string(ebc::report::dump(j));
    if (res.exceeds_budget) return EBC_BUDGET_EXCEEDED;
    if (closed && *closed != res.value) return EBC_PROPERTY_FAILURE;
    return EBC_OK;
  });
}

ebc_status ebc_certify(const ebc_ring* r, const ebc_options* opts, char** report) {
  if (auto st = require(report, "report"); st != EBC_OK) return st;
  *report = nullptr;
  if (auto st = require(r, "ring"); st != EBC_OK) return st;
  return guarded([&] {
    const ebc_options& o = opts_or_default(opts);
    Clock clock;
    Json j = ebc::report::header(r->label, r->ring.order());
    j["structure"] = structure_or_null(r->ring);
    clock.phase("structure");
    const ebc::CRTCertificate cert = ebc::claim_b_sequence(r->ring);
    clock.phase("certificate");
    j["certificates"] = Json::array({ebc::report::certificate(cert)});
    ebc_status status = cert.verified_free ? EBC_OK : EBC_PROPERTY_FAILURE;
    if (r->ring.order() <= o.eb_cap) {
      const ebc::EBResult res = ebc::erdos_burgess(ebc::mult_semigroup(r->ring), search_config(o));
      clock.phase("search");
      j["eb"] = ebc::report::eb(res, o.depth_budget, o.stats != 0);
      if (res.exceeds_budget) {
        if (status == EBC_OK) status = EBC_BUDGET_EXCEEDED;
      } else {
        const bool holds = res.value >= cert.lower_bound;
        j["bound_holds"] = holds;
        if (!holds) status = EBC_PROPERTY_FAILURE;
      }
    }
    if (o.stats) j["timings"] = ebc::report::timings(clock.ms());
    *report = to_c_string(ebc::report::dump(j));
    return status;
  });
}

ebc_status ebc_verify_corpus(const char* corpus_text, const char* source, const ebc_options* opts,
                             char** report) {
  if (auto st = require(report, "report"); st != EBC_OK) return st;
  *report = nullptr;
  return guarded([&] {
    const ebc_options& o = opts_or_default(opts);
    const std::string name = corpus_text == nullptr ? "default" : (source ? source : "corpus");
    Clock clock;
    const auto corpus = corpus_text == nullptr
                            ? ebc::default_corpus()
                            : ebc::parse_corpus(corpus_text, name, o.structure_cap);
    clock.phase("parse");
    ebc::VerifyOptions vo;
    vo.seed = o.seed;
    vo.eb_cap = o.eb_cap;
    vo.search = search_config(o);
    vo.search.depth_budget = 0;  // suites need exact values
    const ebc::VerifySummary sum = ebc::verify_lemmas(corpus, vo);
    clock.phase("verify");
    Json j;
    j["schema_version"] = ebc::report::kSchemaVersion;
    j["corpus"] = name;
    j["summary"] = ebc::report::summary(sum);
    if (o.stats) j["timings"] = ebc::report::timings(clock.ms());
    *report = to_c_string(ebc::report::dump(j));
    return sum.passed() ? EBC_OK : EBC_PROPERTY_FAILURE;
  });
}

}  // extern "C"
