#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ebc/element_set.hpp"
#include "ebc/errors.hpp"
#include "ebc/ring.hpp"

// Ring expression language:
//
//   expr     := term { "x" term }              -- "x" needs whitespace both sides
//   term     := atom { "[x]/(" poly ")" }
//   atom     := "Z/" nat | "GF(" nat ")" | "GF(" nat "," nat ")"
//             | "bool(" nat ")" | "(" expr ")"
//   poly     := monomial { ("+" | "-") monomial }
//   monomial := nat | [nat "*"] "x" ["^" nat]
//
// Examples: "Z/12", "GF(9) x Z/4", "Z/2[x]/(x^2+x+1)", "bool(3) x (Z/3 x Z/5)".
namespace ebc::dsl {

struct RingExpr;
using ExprPtr = std::shared_ptr<const RingExpr>;

struct ZMod {
  std::uint64_t n;
};
struct GF {
  std::uint64_t p;
  std::uint64_t k;
};
struct Bool {
  std::uint64_t k;
};
struct PolyQuot {
  ExprPtr base;
  std::vector<std::int64_t> modulus;  // constant term first, monic
};
struct Product {
  ExprPtr left;
  ExprPtr right;
};

struct RingExpr {
  std::variant<ZMod, GF, Bool, PolyQuot, Product> node;
};

bool operator==(const RingExpr& a, const RingExpr& b);

ExprPtr zmod(std::uint64_t n);
ExprPtr gf(std::uint64_t p, std::uint64_t k);
ExprPtr boolean(std::uint64_t k);
ExprPtr poly_quot(ExprPtr base, std::vector<std::int64_t> modulus);
ExprPtr product(ExprPtr left, ExprPtr right);

class ParseError : public InputError {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, std::size_t offset, std::string expected, std::string found);

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  Kind kind_;
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

inline constexpr std::uint64_t kMaxBoolFactors = 12;

/// Throws ParseError with a byte offset into input.
ExprPtr parse(std::string_view input);

/// Canonical text; parse(pretty(e)) == e.
std::string pretty(const RingExpr& e);

/// Order the expression would elaborate to, saturating at SIZE_MAX.
std::size_t expr_order(const RingExpr& e);

/// Builds the ring. Throws ResourceError (carrying the computed order) when it
/// exceeds cap, before any table is allocated.
FiniteRing elaborate(const RingExpr& e, std::size_t cap = kStructureOrderCap);

}  // namespace ebc::dsl
