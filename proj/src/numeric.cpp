#include "painleve/numeric.hpp"

#include "painleve/errors.hpp"

namespace painleve {

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
  Real r(q.get_num().get_mpz_t());
  Real d(q.get_den().get_mpz_t());
  return r / d;
}

namespace {

using boost::multiprecision::abs;

struct Evaluator {
  const NumericPoint& point;
  Real guard;

  NumericValue lookup(const std::string& name) const {
    auto it = point.find(name);
    if (it == point.end()) throw Error("no value assigned to symbol '" + name + "'");
    Real v = to_real(it->second);
    return {v, abs(v)};
  }

  void check_nonzero(const NumericValue& v, const char* what) const {
    Real ref = v.scale > 1 ? v.scale : Real(1);
    if (abs(v.value) <= guard * ref) throw PoleAtPoint(std::string(what) + " vanishes at the point");
  }

  NumericValue eval(const Expr& e) const {
    switch (e.kind()) {
      case Kind::Constant: {
        Real v = to_real(e.value());
        return {v, abs(v)};
      }
      case Kind::Variable:
        return lookup(variable_name(e.var()));
      case Kind::Parameter:
        return lookup(e.name());
      case Kind::Sum: {
        Real total = 0;
        Real scale = 0;
        for (const auto& t : e.operands()) {
          NumericValue v = eval(t);
          total += v.value;
          if (v.scale > scale) scale = v.scale;
          if (abs(v.value) > scale) scale = abs(v.value);
        }
        return {total, scale};
      }
      case Kind::Product: {
        Real total = 1;
        Real scale = 1;
        for (const auto& f : e.operands()) {
          NumericValue v = eval(f);
          total *= v.value;
          scale *= v.scale > abs(v.value) ? v.scale : abs(v.value);
        }
        return {total, scale};
      }
      case Kind::Power:
        return power(eval(e.base()), e.exponent());
      case Kind::Function: {
        NumericValue u = eval(e.argument());
        Real v;
        switch (e.fn()) {
          case Fn::Sin:
            v = sin(u.value);
            break;
          case Fn::Cos:
            v = cos(u.value);
            break;
          case Fn::Exp:
            v = exp(u.value);
            break;
          case Fn::Ln:
            check_nonzero(u, "logarithm argument");
            if (u.value < 0) throw NegativeRadicand("logarithm of a negative number");
            v = log(u.value);
            break;
        }
        return {v, abs(v)};
      }
    }
    return {Real(0), Real(0)};
  }

  NumericValue power(const NumericValue& base, const Rational& q) const {
    const long num = q.get_num().get_si();
    const unsigned long den = q.get_den().get_ui();
    if (num < 0) check_nonzero(base, "denominator");
    Real b = base.value;
    bool negate = false;
    if (den != 1) {
      if (b < 0) {
        if (den % 2 == 0) throw NegativeRadicand("even root of a negative number");
        b = -b;
        negate = (num % 2) != 0;
      }
      Real r = pow(b, to_real(q));
      if (negate) r = -r;
      Real s = pow(base.scale > abs(base.value) ? base.scale : abs(base.value), to_real(q));
      return {r, abs(r) > s ? abs(r) : s};
    }
    Real r = pow(b, num);
    return {r, abs(r)};
  }
};

}  // namespace

NumericValue evaluate_numeric_scaled(const Expr& e, const NumericPoint& point,
                                     unsigned digits) {
  PrecisionGuard precision(digits + 10);
  Real guard = pow(Real(10), -static_cast<long>(digits / 2));
  Evaluator ev{point, guard};
  return ev.eval(e);
}

Real evaluate_numeric(const Expr& e, const NumericPoint& point, unsigned digits) {
  return evaluate_numeric_scaled(e, point, digits).value;
}

}  // namespace painleve
