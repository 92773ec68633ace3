#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace painleve {

using Integer = mpz_class;
using Rational = mpq_class;

/// The independent variable x, the dependent variable y, and p standing for
/// y' while an equation is being read.
enum class Var : std::uint8_t { X, Y, P };

enum class Fn : std::uint8_t { Sin, Cos, Exp, Ln };

enum class Kind : std::uint8_t {
  Constant,
  Variable,
  Parameter,
  Sum,
  Product,
  Power,
  Function,
};

struct Node;

/// Immutable symbolic expression.
///
/// Construction applies only cheap local identities (constant folding,
/// flattening, 0*e = 0, 1*e = e, e^0 = 1); canonical forms come from
/// normalize(). Copies share structure, so an Expr is cheap to pass by value
/// and safe to share between threads.
class Expr {
 public:
  Expr();
  Expr(int value);  // NOLINT(google-explicit-constructor)
  Expr(const Integer& value);  // NOLINT(google-explicit-constructor)
  Expr(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Expr variable(Var v);
  static Expr parameter(const std::string& name);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(const Expr& base, const Rational& exponent);
  static Expr function(Fn fn, const Expr& argument);

  Kind kind() const;
  const Rational& value() const;
  Var var() const;
  const std::string& name() const;
  Fn fn() const;
  const Rational& exponent() const;
  /// Terms of a Sum, factors of a Product, {base} of a Power, {argument} of a
  /// Function; empty otherwise.
  const std::vector<Expr>& operands() const;
  const Expr& base() const { return operands().front(); }
  const Expr& argument() const { return operands().front(); }

  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_zero() const;
  bool is_one() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
  friend int compare(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Total structural order; used for deterministic atom ordering.
int compare(const Expr& a, const Expr& b);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, long exponent);
Expr pow(const Expr& base, const Rational& exponent);
Expr sin(const Expr& e);
Expr cos(const Expr& e);
Expr exp(const Expr& e);
Expr ln(const Expr& e);

namespace sym {
Expr x();
Expr y();
Expr p();
Expr param(const std::string& name);
}  // namespace sym

std::string variable_name(Var v);
std::string function_name(Fn fn);

/// Prints in the input grammar; rational exponents print as ^(p/q).
std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

/// Symbols (x, y, p and parameter names) occurring anywhere in e, including
/// inside function arguments.
std::vector<std::string> free_symbols(const Expr& e);
bool depends_on(const Expr& e, Var v);
bool contains_atoms(const Expr& e);

/// Partial derivative by the usual rules on the tree; parameters are
/// constants. Rational powers differentiate as u^q -> q u^(q-1) u'.
Expr differentiate(const Expr& e, Var v);

/// Canonical form: a single quotient of coprime integer polynomials in the
/// variables, parameters and atoms, cos^2 rewritten as 1 - sin^2.
Expr normalize(const Expr& e);

/// Keys are "x", "y", "p" or parameter names.
using Bindings = std::map<std::string, Expr>;

/// Simultaneous substitution followed by normalize. Throws
/// DegenerateSubstitution when a denominator becomes identically zero.
Expr substitute(const Expr& e, const Bindings& bindings);

/// Simultaneous substitution without normalizing.
Expr substitute_raw(const Expr& e, const Bindings& bindings);

}  // namespace painleve
