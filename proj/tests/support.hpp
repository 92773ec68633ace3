#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "painleve/classify.hpp"
#include "painleve/numeric.hpp"
#include "painleve/parse.hpp"
#include "painleve/ratfunc.hpp"
#include "painleve/transform.hpp"
#include "painleve/zero_test.hpp"

namespace painleve::testing {

inline Expr E(const std::string& s) { return parse_expression(s, {.rational_exponents = true}); }

inline bool same(const Expr& a, const Expr& b) { return to_ratfunc(a - b).is_zero(); }
inline bool same(const Expr& a, const std::string& b) { return same(a, E(b)); }

inline OdeCubic ode_of(const std::string& rhs) { return extract_cubic_coefficients(E(rhs)); }

inline const std::string kPI = "6*y^2 + x";
inline const std::string kPII = "2*y^3 + x*y + a";
inline const std::string kPIII = "p^2/y - p/x + b/x";
inline const std::string kExample1 =
    "-sin(y)^3*(6*x*cos(y)^2+sin(y)) + (1/x)*(-18*x^3*cos(y)^3*sin(y)^2-3*x^2*sin(y)^3*cos(y)-2)*p"
    " - (18*x^3*cos(y)^4*sin(y)+3*x^2*sin(y)^2*cos(y)^2)*p^2"
    " - (6*x^4*cos(y)^5+x^3*sin(y)*cos(y)^3+x)*p^3";
/// Kamke 6.9 with the cubic sign for which J = -sqrt(a/2) d/b is real.
inline const std::string kKamke = "a*y^3 - b*x*y - c*y - d";
/// Kamke 6.9 exactly as displayed.
inline const std::string kKamkeNegCubic = "-a*y^3 - b*x*y - c*y - d";

/// Invertible point maps used for round trips; each is nondegenerate on
/// the sampling box x, y in [1, 2].
inline const std::vector<std::pair<std::string, std::string>> kFuzzMaps = {
    {"x + y", "y"},
    {"x", "y + x^2"},
    {"x + y^2", "y"},
    {"2*x + y", "x - y"},
    {"x + y^3", "y - x^2"},
    {"x*sin(y)", "x*cos(y)"},
    {"x + sin(y)", "y"},
    {"x", "y + sin(x)"},
    {"x*y", "y"},
    {"x + y", "y + x^2"},
};

/// Random polynomial in x, y of total degree at most `deg` with small
/// integer coefficients.
inline Expr random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  Expr e(0);
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; i + j <= deg; ++j) {
      Rational c(coeff(rng));
      e = e + Expr(c) * pow(sym::x(), i) * pow(sym::y(), j);
    }
  }
  return e;
}

inline OdeCubic random_ode(std::mt19937_64& rng, int deg = 2) {
  return {random_poly(rng, deg), random_poly(rng, deg), random_poly(rng, deg),
          random_poly(rng, deg)};
}

}  // namespace painleve::testing
