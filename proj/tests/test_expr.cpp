#include <gtest/gtest.h>

#include <random>

#include "painleve/errors.hpp"
#include "support.hpp"

using namespace painleve;
using namespace painleve::testing;

namespace {

// Small generated corpus mixing polynomials, quotients and atoms.
std::vector<Expr> corpus() {
  std::vector<Expr> out = {
      E("(x+y)^2 - x^2 - 2*x*y - y^2"),
      E("sin(y)^2 + cos(y)^2 - 1"),
      E("(x^2 - y^2)/(x - y)"),
      E("x*sin(y)/(x^2*cos(y) + a)"),
      E("exp(x)*ln(y) + 3/x - b*y^3"),
      E("(1 + x)^5/(1 + x)^2"),
      E("cos(x*y)^3 - sin(x*y)*cos(x*y)"),
  };
  std::mt19937_64 rng(7);
  for (int i = 0; i < 8; ++i) out.push_back(random_poly(rng, 3) / (random_poly(rng, 2) + E("x^2 + 1")));
  return out;
}

}  // namespace

TEST(Expr, ConstructionIdentities) {
  Expr x = sym::x();
  EXPECT_TRUE((Expr(0) * x).is_zero());
  EXPECT_EQ(to_string(Expr(1) * x), "x");
  EXPECT_TRUE(pow(x, 0).is_one());
  EXPECT_EQ(to_string(Expr(Rational(6, 4))), "3/2");
  EXPECT_EQ(to_string(Expr(Rational(-2, 4))), "-1/2");
}

TEST(Expr, ConstantRootsFoldOrReduce) {
  EXPECT_EQ(to_string(pow(Expr(8), Rational(1, 3))), "2");
  EXPECT_EQ(to_string(pow(Expr(-8), Rational(1, 3))), "-2");
  EXPECT_EQ(to_string(pow(Expr(9), Rational(1, 6))), "3^(1/3)");
  EXPECT_EQ(to_string(pow(pow(Expr(3), Rational(1, 3)), 3)), "3");
}

TEST(Expr, Differentiate) {
  EXPECT_TRUE(same(differentiate(E("6*y^2 + x"), Var::Y), "12*y"));
  EXPECT_TRUE(differentiate(sym::param("c"), Var::X).is_zero());
  EXPECT_TRUE(same(differentiate(E("x*sin(y)"), Var::Y), "x*cos(y)"));
  EXPECT_TRUE(same(differentiate(E("exp(x^2)"), Var::X), "2*x*exp(x^2)"));
  EXPECT_TRUE(same(differentiate(E("ln(x*y)"), Var::X), "1/x"));
  EXPECT_TRUE(same(differentiate(E("cos(x)"), Var::X), "-sin(x)"));
}

TEST(Expr, DerivativesCommute) {
  for (const Expr& e : corpus()) {
    Expr xy = differentiate(differentiate(e, Var::X), Var::Y);
    Expr yx = differentiate(differentiate(e, Var::Y), Var::X);
    EXPECT_TRUE(same(xy, yx)) << to_string(e);
  }
}

TEST(Expr, NormalizeIsIdempotent) {
  for (const Expr& e : corpus()) {
    Expr n = normalize(e);
    EXPECT_EQ(compare(normalize(n), n), 0) << to_string(e);
  }
}

TEST(Expr, NormalizeExamples) {
  EXPECT_TRUE(normalize(E("(x+y)^2 - x^2 - 2*x*y - y^2")).is_zero());
  EXPECT_TRUE(normalize(E("sin(y)^2 + cos(y)^2 - 1")).is_zero());
  EXPECT_EQ(to_string(normalize(E("6/5*4*12"))), "288/5");
}

TEST(Expr, NormalizePreservesValue) {
  NumericPoint pt{{"x", Rational(13, 10)}, {"y", Rational(17, 10)}, {"a", Rational(3, 2)},
                  {"b", Rational(5, 4)}};
  for (const Expr& e : corpus()) {
    Real v = evaluate_numeric(e, pt, 40);
    Real w = evaluate_numeric(normalize(e), pt, 40);
    EXPECT_LE(static_cast<double>(abs(v - w)), 1e-34 * std::max(1.0, static_cast<double>(abs(v))))
        << to_string(e);
  }
}

TEST(ZeroTest, Verdicts) {
  EXPECT_EQ(is_identically_zero(E("12")).verdict, Verdict::NonZero);
  EXPECT_EQ(is_identically_zero(E("exp(x) - exp(x)")).verdict, Verdict::Zero);
  EXPECT_EQ(is_identically_zero(E("x*y - y*x")).verdict, Verdict::Zero);
  EXPECT_EQ(is_identically_zero(E("x - y")).verdict, Verdict::NonZero);
  // The kernel does not know exp(u)exp(v) = exp(u+v); sampling cannot
  // prove zero, so the verdict abstains.
  EXPECT_EQ(is_identically_zero(E("exp(x)*exp(-x) - 1")).verdict, Verdict::Unknown);
  EXPECT_EQ(is_identically_zero(E("exp(x) - 1 - x")).verdict, Verdict::NonZero);
}

TEST(ZeroTest, RationalInputNeverUnknown) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    Expr e = random_poly(rng, 3) / (random_poly(rng, 1) + E("x^2+y^2+1"));
    EXPECT_NE(is_identically_zero(e).verdict, Verdict::Unknown);
    EXPECT_NE(is_identically_zero(e - e).verdict, Verdict::Unknown);
  }
}

TEST(Substitute, Examples) {
  Expr i1 = E("1/(12*x^5)");
  EXPECT_TRUE(same(substitute(i1, {{"x", E("x*sin(y)")}}), "1/(12*x^5*sin(y)^5)"));
  EXPECT_TRUE(same(substitute(E("x*y + a"), {{"y", sym::y()}}), "x*y + a"));
  EXPECT_THROW(substitute(E("1/x"), {{"x", E("y - y")}}), DegenerateSubstitution);
  // simultaneous, not sequential
  EXPECT_TRUE(same(substitute(E("x - y"), {{"x", sym::y()}, {"y", sym::x()}}), "y - x"));
}

TEST(Numeric, Examples) {
  Real v = evaluate_numeric(E("1/(12*x^5)"), {{"x", Rational(1)}}, 50);
  EXPECT_LT(static_cast<double>(abs(12 * v - 1)), 1e-45);
  EXPECT_THROW(evaluate_numeric(E("1/(x - 1)"), {{"x", Rational(1)}}, 40), PoleAtPoint);
  EXPECT_THROW(evaluate_numeric(E("(x - 2)^(1/2)"), {{"x", Rational(1)}}, 40), NegativeRadicand);
  Real c = evaluate_numeric(E("(x - 9)^(1/3)"), {{"x", Rational(1)}}, 40);
  EXPECT_LT(static_cast<double>(abs(c + 2)), 1e-30);
}
