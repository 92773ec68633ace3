#pragma once

#include <string>
#include <string_view>

#include "painleve/expr.hpp"

namespace painleve {

/// y'' = P + 3Q y' + 3R y'^2 + S y'^3. Q and R are stored without the 3.
struct OdeCubic {
  Expr P;
  Expr Q;
  Expr R;
  Expr S;
};

struct ParseOptions {
  /// Accept constant rational exponents such as x^(1/3). Off for user input;
  /// on when reading back emitted maps.
  bool rational_exponents = false;
};

/// Grammar (whitespace is ignored):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' exponent)?
///   exponent:= ('-' | '+')* (number | '(' expr ')') , a constant
///   primary := number | name | func '(' expr ')' | '(' expr ')'
///   func    := sin | cos | exp | ln
///   name    := x | y | p | any other single letter (a parameter)
///   number  := digits ('.' digits)?
///
/// So -x^2 is -(x^2) and x^2^3 is x^(2^3).
Expr parse_expression(std::string_view text, const ParseOptions& opts = {});

/// Splits a right-hand side in x, y, p into the coefficients of p^0..p^3.
/// Throws NotCubicInDerivative when p has degree above 3, sits in a
/// denominator or occurs inside a function or root.
OdeCubic extract_cubic_coefficients(const Expr& rhs);

/// Builds the equation from raw coefficients of 1, y', y'^2, y'^3; the middle
/// two are divided by 3.
OdeCubic ode_from_raw(const Expr& p0, const Expr& p1, const Expr& p2, const Expr& p3);

/// P + 3Q p + 3R p^2 + S p^3, normalized.
Expr assemble_rhs(const OdeCubic& ode);

OdeCubic substitute(const OdeCubic& ode, const Bindings& bindings);

}  // namespace painleve
