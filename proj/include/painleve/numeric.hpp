#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <string>

#include "painleve/expr.hpp"

namespace painleve {

using Real = boost::multiprecision::mpfr_float;

/// Values for x, y, p and parameters, keyed like Bindings.
using NumericPoint = std::map<std::string, Rational>;

struct NumericValue {
  Real value;
  /// Largest magnitude met among the summands of the evaluation; the
  /// reference scale for deciding that a value is numerically zero.
  Real scale;
};

/// Evaluates e at `point` with `digits` significant decimal digits.
/// Throws PoleAtPoint when a denominator or a logarithm argument vanishes
/// (below 10^(-digits/2) relative to its own scale), NegativeRadicand for an
/// even root of a negative number, and Error when a symbol is unassigned.
/// Odd roots of negative numbers take the real branch.
NumericValue evaluate_numeric_scaled(const Expr& e, const NumericPoint& point,
                                     unsigned digits);

Real evaluate_numeric(const Expr& e, const NumericPoint& point, unsigned digits);

/// Sets the default MPFR precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rational& q);

}  // namespace painleve
