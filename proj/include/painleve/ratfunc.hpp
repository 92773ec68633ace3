#pragma once

#include "painleve/expr.hpp"
#include "painleve/poly.hpp"

namespace painleve {

/// Quotient of integer polynomials in canonical form: numerator and
/// denominator coprime in Z[symbols], positive leading coefficient in the
/// denominator, denominator 1 for zero. Ring relations (cos^2 = 1 - sin^2,
/// r^q = base for a root atom r) are applied before cancelling.
class RatFunc {
 public:
  RatFunc();
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  /// Stores num/den as given; the caller guarantees canonical form.
  static RatFunc from_canonical(Poly num, Poly den);
  static RatFunc constant(const RingPtr& ring, const Rational& c);
  static RatFunc symbol(const RingPtr& ring, const Symbol& s);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant function.
  Rational constant_value() const;
  /// Bit i set when ring symbol i occurs in numerator or denominator.
  std::uint32_t support() const { return num_.support() | den_.support(); }

  RatFunc remap(const RingPtr& target) const;
  RatFunc inverse() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

 private:
  Poly num_;
  Poly den_;
};

RatFunc operator*(const Rational& c, const RatFunc& f);
RatFunc pow(const RatFunc& base, long exponent);

/// Converts an expression into the given ring, which must already contain
/// every symbol of e.
RatFunc to_ratfunc(const Expr& e, const RingPtr& ring);
/// Converts into the smallest closed ring of e.
RatFunc to_ratfunc(const Expr& e);
/// Converts every expression into one common ring.
std::vector<RatFunc> to_ratfuncs(const std::vector<Expr>& es);

Expr to_expr(const RatFunc& f);
Expr to_expr(const Poly& p);

/// Partial derivative with respect to x, y or p, applying the chain rule
/// through atoms.
RatFunc derivative(const RatFunc& f, Var v);

/// Applies ring relations (trigonometric and radical) to a quotient.
RatFunc reduce_relations(const Poly& num, const Poly& den);

}  // namespace painleve
