#include "ebc/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace ebc::dsl {

namespace {

constexpr std::uint64_t kMaxLiteral = std::uint64_t{1} << 40;
constexpr std::uint64_t kMaxPolyDegree = 64;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > SIZE_MAX / a) return SIZE_MAX;
  return a * b;
}

std::size_t sat_pow(std::size_t base, std::uint64_t exp) {
  std::size_t out = 1;
  for (std::uint64_t i = 0; i < exp && out != SIZE_MAX; ++i) out = sat_mul(out, base);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  ExprPtr run() {
    skip_ws();
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != in_.size()) syntax("' x ' or end of input");
    return e;
  }

 private:
  [[noreturn]] void syntax(const std::string& expected) const { syntax_at(pos_, expected); }
  [[noreturn]] void syntax_at(std::size_t at, const std::string& expected) const {
    throw ParseError(ParseError::Kind::Syntax, at, expected, describe(at));
  }
  [[noreturn]] void semantic(std::size_t at, const std::string& expected,
                             const std::string& found) const {
    throw ParseError(ParseError::Kind::Semantic, at, expected, found);
  }

  std::string describe(std::size_t at) const {
    if (at >= in_.size()) return "end of input";
    std::size_t end = at;
    while (end < in_.size() && end - at < 8 && !std::isspace(static_cast<unsigned char>(in_[end])))
      ++end;
    if (end == at) return "whitespace";
    return "'" + std::string(in_.substr(at, end - at)) + "'";
  }

  std::size_t skip_ws() {
    const std::size_t start = pos_;
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    return pos_ - start;
  }

  bool at(std::string_view lit) const { return in_.substr(pos_, lit.size()) == lit; }

  bool accept(std::string_view lit) {
    if (!at(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) syntax("'" + std::string(lit) + "'");
  }

  std::uint64_t nat() {
    if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
      syntax("number");
    }
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(in_[pos_] - '0');
      ++pos_;
      if (v > kMaxLiteral) syntax_at(start, "number at most " + std::to_string(kMaxLiteral));
    }
    return v;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (true) {
      const std::size_t save = pos_;
      const std::size_t ws = skip_ws();
      if (pos_ < in_.size() && in_[pos_] == 'x') {
        if (ws == 0) syntax("whitespace before product operator 'x'");
        if (pos_ + 1 >= in_.size() || !std::isspace(static_cast<unsigned char>(in_[pos_ + 1]))) {
          syntax_at(pos_ + 1, "whitespace after product operator 'x'");
        }
        ++pos_;
        skip_ws();
        left = product(std::move(left), term());
        continue;
      }
      pos_ = save;
      return left;
    }
  }

  ExprPtr term() {
    ExprPtr a = atom();
    while (true) {
      const std::size_t save = pos_;
      skip_ws();
      if (!accept("[x]/(")) {
        pos_ = save;
        return a;
      }
      skip_ws();
      const std::size_t poly_at = pos_;
      std::vector<std::int64_t> coeffs = poly();
      skip_ws();
      expect(")");
      if (coeffs.size() < 2 || coeffs.back() != 1) {
        semantic(poly_at, "monic polynomial of degree >= 1", "non-monic or constant polynomial");
      }
      a = poly_quot(std::move(a), std::move(coeffs));
    }
  }

  ExprPtr atom() {
    if (accept("Z/")) {
      const std::size_t num_at = pos_;
      const std::uint64_t n = nat();
      if (n == 0) semantic(num_at, "modulus >= 1", "0");
      return zmod(n);
    }
    if (accept("GF(")) {
      skip_ws();
      const std::size_t first_at = pos_;
      const std::uint64_t a = nat();
      skip_ws();
      if (accept(",")) {
        skip_ws();
        const std::size_t k_at = pos_;
        const std::uint64_t k = nat();
        skip_ws();
        expect(")");
        if (!is_prime(a)) semantic(first_at, "prime characteristic", std::to_string(a));
        if (k == 0) semantic(k_at, "degree >= 1", "0");
        return gf(a, k);
      }
      expect(")");
      if (a >= 2) {
        std::uint64_t p = a;  // smallest prime factor
        for (std::uint64_t d = 2; d * d <= a; ++d) {
          if (a % d == 0) {
            p = d;
            break;
          }
        }
        std::uint64_t rest = a, k = 0;
        while (rest % p == 0) {
          rest /= p;
          ++k;
        }
        if (rest == 1) return gf(p, k);
      }
      semantic(first_at, "prime power field order", std::to_string(a));
    }
    if (accept("bool(")) {
      skip_ws();
      const std::size_t k_at = pos_;
      const std::uint64_t k = nat();
      skip_ws();
      expect(")");
      if (k == 0 || k > kMaxBoolFactors) {
        semantic(k_at, "factor count in [1," + std::to_string(kMaxBoolFactors) + "]",
                 std::to_string(k));
      }
      return boolean(k);
    }
    if (accept("(")) {
      skip_ws();
      ExprPtr e = expr();
      skip_ws();
      expect(")");
      return e;
    }
    syntax("ring (Z/n, GF(q), GF(p,k), bool(k) or '(')");
  }

  std::vector<std::int64_t> poly() {
    std::map<std::uint64_t, std::int64_t> terms;
    std::int64_t sign = 1;
    while (true) {
      skip_ws();
      const auto [degree, coeff] = monomial();
      terms[degree] += sign * static_cast<std::int64_t>(coeff);
      const std::size_t save = pos_;
      skip_ws();
      if (accept("+")) {
        sign = 1;
      } else if (accept("-")) {
        sign = -1;
      } else {
        pos_ = save;
        break;
      }
    }
    std::vector<std::int64_t> out(terms.rbegin()->first + 1, 0);
    for (const auto& [d, c] : terms) out[d] = c;
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  }

  std::pair<std::uint64_t, std::uint64_t> monomial() {
    std::uint64_t coeff = 1;
    if (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
      coeff = nat();
      const std::size_t save = pos_;
      skip_ws();
      if (!accept("*")) {
        pos_ = save;
        return {0, coeff};
      }
      skip_ws();
    }
    if (!accept("x")) syntax("polynomial term");
    const std::size_t save = pos_;
    skip_ws();
    if (!accept("^")) {
      pos_ = save;
      return {1, coeff};
    }
    skip_ws();
    const std::size_t exp_at = pos_;
    const std::uint64_t e = nat();
    if (e > kMaxPolyDegree) {
      semantic(exp_at, "exponent at most " + std::to_string(kMaxPolyDegree), std::to_string(e));
    }
    return {e, coeff};
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

std::string pretty_poly(const std::vector<std::int64_t>& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const std::uint64_t mag = c[i] < 0 ? static_cast<std::uint64_t>(-c[i]) : static_cast<std::uint64_t>(c[i]);
    if (!out.empty()) out += c[i] < 0 ? " - " : " + ";
    if (i == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t offset, std::string expected, std::string found)
    : InputError((kind == Kind::Syntax ? "syntax error at offset " : "invalid value at offset ") +
                 std::to_string(offset) + ": expected " + expected + ", found " + found),
      kind_(kind),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ExprPtr zmod(std::uint64_t n) { return std::make_shared<RingExpr>(RingExpr{ZMod{n}}); }
ExprPtr gf(std::uint64_t p, std::uint64_t k) { return std::make_shared<RingExpr>(RingExpr{GF{p, k}}); }
ExprPtr boolean(std::uint64_t k) { return std::make_shared<RingExpr>(RingExpr{Bool{k}}); }
ExprPtr poly_quot(ExprPtr base, std::vector<std::int64_t> modulus) {
  return std::make_shared<RingExpr>(RingExpr{PolyQuot{std::move(base), std::move(modulus)}});
}
ExprPtr product(ExprPtr left, ExprPtr right) {
  return std::make_shared<RingExpr>(RingExpr{Product{std::move(left), std::move(right)}});
}

bool operator==(const RingExpr& a, const RingExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const ZMod& x) { return x.n == std::get<ZMod>(b.node).n; },
          [&](const GF& x) {
            const auto& y = std::get<GF>(b.node);
            return x.p == y.p && x.k == y.k;
          },
          [&](const Bool& x) { return x.k == std::get<Bool>(b.node).k; },
          [&](const PolyQuot& x) {
            const auto& y = std::get<PolyQuot>(b.node);
            return x.modulus == y.modulus && *x.base == *y.base;
          },
          [&](const Product& x) {
            const auto& y = std::get<Product>(b.node);
            return *x.left == *y.left && *x.right == *y.right;
          },
      },
      a.node);
}

ExprPtr parse(std::string_view input) { return Parser(input).run(); }

std::string pretty(const RingExpr& e) {
  return std::visit(
      Overloaded{
          [](const ZMod& x) { return "Z/" + std::to_string(x.n); },
          [](const GF& x) { return "GF(" + std::to_string(sat_pow(x.p, x.k)) + ")"; },
          [](const Bool& x) { return "bool(" + std::to_string(x.k) + ")"; },
          [](const PolyQuot& x) {
            std::string base = pretty(*x.base);
            if (std::holds_alternative<Product>(x.base->node)) base = "(" + base + ")";
            return base + "[x]/(" + pretty_poly(x.modulus) + ")";
          },
          [](const Product& x) {
            std::string right = pretty(*x.right);
            if (std::holds_alternative<Product>(x.right->node)) right = "(" + right + ")";
            return pretty(*x.left) + " x " + right;
          },
      },
      e.node);
}

std::size_t expr_order(const RingExpr& e) {
  return std::visit(
      Overloaded{
          [](const ZMod& x) { return static_cast<std::size_t>(x.n); },
          [](const GF& x) { return sat_pow(x.p, x.k); },
          [](const Bool& x) { return sat_pow(2, x.k); },
          [](const PolyQuot& x) { return sat_pow(expr_order(*x.base), x.modulus.size() - 1); },
          [](const Product& x) { return sat_mul(expr_order(*x.left), expr_order(*x.right)); },
      },
      e.node);
}

FiniteRing elaborate(const RingExpr& e, std::size_t cap) {
  const std::size_t order = expr_order(e);
  const std::string label = pretty(e);
  if (order > cap) {
    throw ResourceError("'" + label + "' has order " +
                            (order == SIZE_MAX ? std::string("beyond 2^64") : std::to_string(order)) +
                            ", above cap " + std::to_string(cap),
                        order, cap);
  }
  FiniteRing ring = std::visit(
      Overloaded{
          [&](const ZMod& x) { return make_zmod(x.n, cap); },
          [&](const GF& x) { return make_gf(x.p, x.k, cap); },
          [&](const Bool& x) {
            if (x.k == 0 || x.k > kMaxBoolFactors) throw InputError("bool(k) needs 1 <= k <= 12");
            return make_boolean(x.k, cap);
          },
          [&](const PolyQuot& x) {
            const FiniteRing base = elaborate(*x.base, cap);
            std::vector<ElementId> coeffs;
            coeffs.reserve(x.modulus.size());
            for (std::int64_t c : x.modulus) coeffs.push_back(base.from_integer(c));
            return make_quotient_poly(base, coeffs, cap);
          },
          [&](const Product& x) {
            return ring_product(elaborate(*x.left, cap), elaborate(*x.right, cap), cap);
          },
      },
      e.node);
  ring.set_label(label);
  return ring;
}

}  // namespace ebc::dsl
