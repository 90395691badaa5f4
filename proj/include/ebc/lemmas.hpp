#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ebc/dsl.hpp"
#include "ebc/errors.hpp"
#include "ebc/solver.hpp"

namespace ebc {

struct CorpusEntry {
  std::string text;  // as written
  dsl::ExprPtr expr;
  std::string source;
  std::size_t line = 0;  // 1-based; 0 for built-in entries
};

/// One expression per line, '#' starts a comment, blank lines are skipped.
/// Every entry must parse and elaborate within cap; otherwise InputError with
/// a "source:line: " prefix.
std::vector<CorpusEntry> parse_corpus(std::string_view text, const std::string& source,
                                      std::size_t cap = kStructureOrderCap);

/// Z/n for n <= 30, bool(k) for k <= 3, GF(q) for q <= 16, and the products
/// A x B (A before B in that list) of order <= 64. Products skip Z/1 and the
/// prime fields GF(p) and bool(1), which repeat Z/p and Z/2.
std::vector<CorpusEntry> default_corpus();

struct PropertyResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;  // first few failures

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t eb_cap = 128;         // exact I(S) only up to this order
  std::size_t oracle_cap = 24;      // oracle cross-check up to this order
  std::size_t random_closures = 100;
  std::size_t random_quotients = 100;
  std::size_t quotient_order_cap = 32;
  SearchConfig search;
};

struct VerifySummary {
  std::size_t instances = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// Runs every property suite over the corpus. Property failures are counted,
/// not thrown.
VerifySummary verify_lemmas(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts);

}  // namespace ebc
