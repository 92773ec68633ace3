#include "painleve/parse.hpp"

#include <cctype>

#include "painleve/errors.hpp"
#include "painleve/ratfunc.hpp"

namespace painleve {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : text_(text), opts_(opts) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  ParseOptions opts_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::SyntaxError, pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  Expr expr() {
    Expr e = term();
    while (true) {
      if (accept('+')) {
        e = e + term();
      } else if (accept('-')) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Expr d = unary();
        if (d.is_zero()) throw ParseError(ParseError::Kind::SyntaxError, at, "division by zero");
        e = e / d;
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t at = pos_;
    Expr ex = exponent();
    if (!ex.is_constant()) {
      throw ParseError(ParseError::Kind::NonIntegerExponent, at, "exponent is not a constant");
    }
    const Rational& q = ex.value();
    if (q.get_den() != 1 && !opts_.rational_exponents) {
      throw ParseError(ParseError::Kind::NonIntegerExponent, at,
                       "exponent " + q.get_str() + " is not an integer");
    }
    if (base.is_zero() && q < 0) {
      throw ParseError(ParseError::Kind::SyntaxError, at, "zero to a negative power");
    }
    return Expr::power(base, q);
  }

  Expr exponent() {
    if (accept('-')) return -exponent();
    if (accept('+')) return exponent();
    return power();
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr number() {
    std::size_t start = pos_;
    std::string digits;
    std::size_t fraction = 0;
    bool dot = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (dot) ++fraction;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fraction);
    return Expr(Rational(num, den));
  }

  Expr name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    skip_space();
    bool call = pos_ < text_.size() && text_[pos_] == '(';
    if (call) {
      Fn fn;
      if (id == "sin") {
        fn = Fn::Sin;
      } else if (id == "cos") {
        fn = Fn::Cos;
      } else if (id == "exp") {
        fn = Fn::Exp;
      } else if (id == "ln") {
        fn = Fn::Ln;
      } else {
        throw ParseError(ParseError::Kind::UnknownFunction, start, "unknown function '" + id + "'");
      }
      ++pos_;
      Expr arg = expr();
      expect(')');
      return Expr::function(fn, arg);
    }
    if (id == "x") return sym::x();
    if (id == "y") return sym::y();
    if (id == "p") return sym::p();
    if (id.size() == 1) return sym::param(id);
    if (id == "sin" || id == "cos" || id == "exp" || id == "ln") {
      pos_ = start + id.size();
      fail("function '" + id + "' needs an argument in parentheses");
    }
    pos_ = start;
    fail("unknown identifier '" + id + "' (parameters are single letters)");
  }
};

}  // namespace

Expr parse_expression(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).parse();
}

OdeCubic extract_cubic_coefficients(const Expr& rhs) {
  RatFunc f = to_ratfunc(rhs);
  const RingPtr& ring = f.ring();
  if (!ring) return OdeCubic{to_expr(f), Expr(0), Expr(0), Expr(0)};
  auto pi = ring->index_of(Var::P);
  if (!pi) return OdeCubic{to_expr(f), Expr(0), Expr(0), Expr(0)};
  for (std::size_t i = 0; i < ring->size(); ++i) {
    const Symbol& s = ring->symbol(i);
    if (s.is_atom() && depends_on(s.to_expr(), Var::P)) {
      throw NotCubicInDerivative("y' occurs inside " + to_string(s.to_expr()));
    }
  }
  const std::size_t p = *pi;
  if (f.den().degree(p) > 0) throw NotCubicInDerivative("y' occurs in a denominator");
  unsigned degree = f.num().degree(p);
  if (degree > 3) {
    throw NotCubicInDerivative("degree " + std::to_string(degree) + " in y' exceeds 3");
  }
  Expr c[4];
  for (unsigned k = 0; k < 4; ++k) {
    c[k] = to_expr(RatFunc(f.num().coefficient(p, k), f.den()));
  }
  return ode_from_raw(c[0], c[1], c[2], c[3]);
}

OdeCubic ode_from_raw(const Expr& p0, const Expr& p1, const Expr& p2, const Expr& p3) {
  return OdeCubic{normalize(p0), normalize(p1 / Expr(3)), normalize(p2 / Expr(3)),
                  normalize(p3)};
}

Expr assemble_rhs(const OdeCubic& ode) {
  Expr p = sym::p();
  return normalize(ode.P + Expr(3) * ode.Q * p + Expr(3) * ode.R * pow(p, 2) +
                   ode.S * pow(p, 3));
}

OdeCubic substitute(const OdeCubic& ode, const Bindings& bindings) {
  return OdeCubic{substitute(ode.P, bindings), substitute(ode.Q, bindings),
                  substitute(ode.R, bindings), substitute(ode.S, bindings)};
}

}  // namespace painleve
