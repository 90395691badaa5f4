// ebc: command-line front end over the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ebc/ebc.h"

namespace {

enum Exit { kOk = 0, kInput = 1, kBudget = 2, kProperty = 3 };

int exit_code(ebc_status st) {
  switch (st) {
    case EBC_OK: return kOk;
    case EBC_INPUT_ERROR:
    case EBC_RESOURCE_ERROR: return kInput;
    case EBC_BUDGET_EXCEEDED: return kBudget;
    case EBC_PROPERTY_FAILURE:
    case EBC_INTERNAL_ERROR: return kProperty;
  }
  return kProperty;
}

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RingHandle {
  ebc_ring* p = nullptr;
  ~RingHandle() { ebc_ring_free(p); }
};
struct SemigroupHandle {
  ebc_semigroup* p = nullptr;
  ~SemigroupHandle() { ebc_semigroup_free(p); }
};

class Cli {
 public:
  Cli() { ebc_options_init(&opts_); }

  int run(int argc, char** argv) {
    CLI::App app{"Erdos-Burgess constants and structure of finite commutative rings", "ebc"};
    app.set_version_flag("--version", std::string(ebc_version()));
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--json", json_path_, "Write the report here instead of stdout");
    app.add_option("--cap", opts_.structure_cap, "Largest ring or semigroup to build")
        ->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--eb-cap", opts_.eb_cap, "Largest order given to the exact solver")
        ->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--depth-budget", opts_.depth_budget, "Longest sequence searched (0: GHW bound)")
        ->capture_default_str();
    app.add_option("--threads", opts_.threads, "Solver worker threads")
        ->capture_default_str()->check(CLI::Range(1U, 256U));
    app.add_option("--seed", opts_.seed, "Seed for sampled checks and random suites")
        ->capture_default_str();
    app.add_flag("--stats", stats_, "Add timings and search counters to the report");

    auto* analyze = app.add_subcommand("analyze", "Ring structure report");
    add_ring_input(analyze);
    auto* eb = app.add_subcommand("eb", "Exact I(S) of the multiplicative semigroup");
    add_ring_input(eb);
    auto* dav = app.add_subcommand("davenport", "Davenport constant of Z_d1 x ... x Z_dr");
    dav->add_option("factors", group_, "Invariant factors, e.g. 2,2 or 6")->required();
    auto* certify = app.add_subcommand("certify", "CRT lower-bound certificate");
    add_ring_input(certify);
    auto* verify = app.add_subcommand("verify-lemmas", "Run the property suites over a corpus");
    verify->add_option("--corpus", corpus_path_, "Corpus file (default: built-in corpus)");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      return app.exit(e) == 0 ? kOk : kInput;
    }
    opts_.stats = stats_ ? 1 : 0;

    if (*analyze) return with_ring([&](ebc_ring* r, char** out) { return ebc_analyze(r, &opts_, out); });
    if (*certify) return with_ring([&](ebc_ring* r, char** out) { return ebc_certify(r, &opts_, out); });
    if (*eb) return run_eb();
    if (*dav) return finish(ebc_davenport(group_.c_str(), &opts_, &report_));
    return run_verify();
  }

 private:
  void add_ring_input(CLI::App* sub) {
    auto* expr = sub->add_option("ring", expr_, "Ring expression, e.g. \"Z/12\" or \"GF(9) x bool(2)\"");
    auto* table = sub->add_option("--ring-json", table_path_, "Raw {order, add, mul} table file");
    expr->excludes(table);
  }

  bool need_ring_input() {
    if (!expr_.empty() || !table_path_.empty()) return true;
    std::cerr << "ebc: error: give a ring expression or --ring-json <file>\n";
    return false;
  }

  std::optional<std::string> read_or_complain(const std::string& path) {
    auto text = slurp(path);
    if (!text) std::cerr << "ebc: error: cannot read " << path << "\n";
    return text;
  }

  int load_ring(RingHandle& h) {
    ebc_status st;
    if (!table_path_.empty()) {
      auto text = read_or_complain(table_path_);
      if (!text) return kInput;
      st = ebc_ring_from_json(text->c_str(), &opts_, &h.p);
    } else {
      st = ebc_ring_parse(expr_.c_str(), &opts_, &h.p);
    }
    if (st != EBC_OK) {
      std::cerr << "ebc: error: " << ebc_last_error() << "\n";
      return exit_code(st);
    }
    return kOk;
  }

  template <class F>
  int with_ring(F&& f) {
    if (!need_ring_input()) return kInput;
    RingHandle h;
    if (int rc = load_ring(h); rc != kOk) return rc;
    return finish(f(h.p, &report_));
  }

  int run_eb() {
    if (!need_ring_input()) return kInput;
    if (!table_path_.empty()) {
      auto text = read_or_complain(table_path_);
      if (!text) return kInput;
      // Without an addition table the input is a bare semigroup.
      if (text->find("\"add\"") == std::string::npos) {
        SemigroupHandle h;
        const ebc_status st = ebc_semigroup_from_json(text->c_str(), &opts_, &h.p);
        if (st != EBC_OK) {
          std::cerr << "ebc: error: " << ebc_last_error() << "\n";
          return exit_code(st);
        }
        return finish(ebc_eb_semigroup(h.p, &opts_, &report_));
      }
    }
    return with_ring([&](ebc_ring* r, char** out) { return ebc_eb_ring(r, &opts_, out); });
  }

  int run_verify() {
    if (corpus_path_.empty()) return finish(ebc_verify_corpus(nullptr, nullptr, &opts_, &report_));
    auto text = read_or_complain(corpus_path_);
    if (!text) return kInput;
    return finish(ebc_verify_corpus(text->c_str(), corpus_path_.c_str(), &opts_, &report_));
  }

  int finish(ebc_status st) {
    if (report_ == nullptr) {
      std::cerr << "ebc: error: " << ebc_last_error() << "\n";
      return exit_code(st);
    }
    const std::string text(report_);
    ebc_string_free(report_);
    report_ = nullptr;
    if (json_path_.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(json_path_, std::ios::binary);
      out << text;
      if (!out) {
        std::cerr << "ebc: error: cannot write " << json_path_ << "\n";
        return kInput;
      }
    }
    if (st == EBC_BUDGET_EXCEEDED) std::cerr << "ebc: depth budget exhausted; value is a lower bound\n";
    if (st == EBC_PROPERTY_FAILURE) std::cerr << "ebc: property check failed\n";
    return exit_code(st);
  }

  ebc_options opts_{};
  bool stats_ = false;
  std::string json_path_, expr_, table_path_, group_, corpus_path_;
  char* report_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) { return Cli().run(argc, argv); }
