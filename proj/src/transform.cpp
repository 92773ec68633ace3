#include "painleve/transform.hpp"

#include <algorithm>
#include <set>

#include "painleve/errors.hpp"
#include "painleve/numeric.hpp"
#include "painleve/roots.hpp"

namespace painleve {

OdeCubic Target::ode() const {
  Expr x = sym::x();
  Expr y = sym::y();
  if (kind == Kind::PainleveI) return OdeCubic{normalize(6 * pow(y, 2) + x), 0, 0, 0};
  return OdeCubic{normalize(2 * pow(y, 3) + x * y + J), 0, 0, 0};
}

namespace {

Expr dnorm(const Expr& e, int i, int j) {
  RatFunc f = to_ratfunc(e);
  for (int k = 0; k < i; ++k) f = derivative(f, Var::X);
  for (int k = 0; k < j; ++k) f = derivative(f, Var::Y);
  return to_expr(f);
}

struct Jet {
  Expr X, Xx, Xy, Xxx, Xxy, Xyy;
  Expr Y, Yx, Yy, Yxx, Yxy, Yyy;
};

Jet jet_of(const Expr& X, const Expr& Y) {
  return Jet{X, dnorm(X, 1, 0), dnorm(X, 0, 1), dnorm(X, 2, 0), dnorm(X, 1, 1), dnorm(X, 0, 2),
             Y, dnorm(Y, 1, 0), dnorm(Y, 0, 1), dnorm(Y, 2, 0), dnorm(Y, 1, 1), dnorm(Y, 0, 2)};
}

void add_symbols(std::set<std::string>& names, const Expr& e) {
  for (const auto& n : free_symbols(e)) names.insert(n);
}

}  // namespace

Expr jacobian(const Expr& x_new, const Expr& y_new) {
  return normalize(dnorm(x_new, 1, 0) * dnorm(y_new, 0, 1) -
                   dnorm(x_new, 0, 1) * dnorm(y_new, 1, 0));
}

Verification verify_map(const OdeCubic& source, const Target& target, const PointMap& map,
                        const VerifyOptions& opts) {
  if (opts.samples < 1) throw Error("verify_map needs at least one sample");
  const Jet j = jet_of(map.x_new, map.y_new);
  const Expr rhs = assemble_rhs(source);
  std::set<std::string> names;
  for (const Expr* e : {&rhs, &j.X, &j.Xx, &j.Xy, &j.Xxx, &j.Xxy, &j.Xyy, &j.Y, &j.Yx, &j.Yy,
                        &j.Yxx, &j.Yxy, &j.Yyy, &target.J}) {
    add_symbols(names, *e);
  }
  RationalSampler sampler(opts.seed);
  Verification out;
  out.passed = true;
  Real worst = 0;
  int radicand_skips = 0;
  const int budget = opts.samples * 50;
  for (int attempt = 0; attempt < budget && out.samples < opts.samples; ++attempt) {
    NumericPoint pt;
    for (const auto& n : names) pt[n] = n == "p" ? sampler.draw(-1, 1) : sampler.draw(1, 2);
    if (!pt.count("p")) pt["p"] = sampler.draw(-1, 1);
    try {
      const unsigned dg = opts.digits;
      auto ev = [&](const Expr& e) { return evaluate_numeric(e, pt, dg); };
      PrecisionGuard precision(dg + 10);
      Real p = to_real(pt["p"]);
      Real q = ev(rhs);
      Real U = ev(j.Xx) + ev(j.Xy) * p;
      Real V = ev(j.Yx) + ev(j.Yy) * p;
      Real Xv = ev(j.X);
      Real Yv = ev(j.Y);
      if (abs(U) < pow(Real(10), -static_cast<long>(dg / 2))) {
        ++out.skipped;
        continue;
      }
      Real Y2 = ev(j.Yxx) + 2 * ev(j.Yxy) * p + ev(j.Yyy) * p * p + ev(j.Yy) * q;
      Real X2 = ev(j.Xxx) + 2 * ev(j.Xxy) * p + ev(j.Xyy) * p * p + ev(j.Xy) * q;
      Real ypp = (Y2 * U - V * X2) / (U * U * U);
      Real residual;
      Real scale;
      if (target.kind == Target::Kind::PainleveI) {
        Real t1 = 6 * Yv * Yv;
        residual = ypp - t1 - Xv;
        scale = std::max({abs(ypp), abs(t1), abs(Xv)});
      } else {
        Real Jv = ev(target.J);
        Real t1 = 2 * Yv * Yv * Yv;
        Real t2 = Xv * Yv;
        residual = ypp - t1 - t2 - Jv;
        scale = std::max({abs(ypp), abs(t1), abs(t2), abs(Jv)});
      }
      Real rel = scale > 0 ? Real(abs(residual) / scale) : Real(abs(residual));
      if (rel > worst) worst = rel;
      ++out.samples;
    } catch (const NegativeRadicand&) {
      ++out.skipped;
      ++radicand_skips;
    } catch (const PoleAtPoint&) {
      ++out.skipped;
    }
  }
  if (out.samples == 0) {
    if (radicand_skips > 0) {
      throw NegativeRadicand("every sample point gives a negative radicand in the map");
    }
    throw AllSamplesSingular("no usable sample point in " + std::to_string(budget) + " attempts");
  }
  out.max_residual = static_cast<double>(worst);
  out.passed = worst < opts.tolerance;
  out.note = std::to_string(out.samples) + " samples in x, y ∈ [1,2], p ∈ [-1,1]";
  if (out.skipped) out.note += ", " + std::to_string(out.skipped) + " singular points skipped";
  return out;
}

namespace {

void check_invertible(const PointMap& m) {
  if (is_identically_zero(jacobian(m.x_new, m.y_new)).zero()) {
    throw DegenerateMap("Jacobian of (" + to_string(m.x_new) + ", " + to_string(m.y_new) +
                        ") vanishes identically");
  }
}

MapResult arbitrate(const OdeCubic& source, std::vector<PointMap> candidates,
                    const std::vector<Target>& targets, const VerifyOptions& opts,
                    bool sixth_roots) {
  MapResult result;
  std::optional<std::size_t> winner;
  std::string failures;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    try {
      candidates[i].verification = verify_map(source, targets[i], candidates[i], opts);
    } catch (const NegativeRadicand& e) {
      if (sixth_roots) throw SixthRootOfNegative(e.what());
      throw;
    }
    const Verification& v = *candidates[i].verification;
    if (v.passed && !winner) winner = i;
    failures += " " + candidates[i].branch + ": max residual " + std::to_string(v.max_residual) + ";";
  }
  result.candidates = candidates;
  if (!winner) throw BranchVerificationFailed("no sign branch verifies:" + failures);
  result.chosen = candidates[*winner];
  int passed = 0;
  for (const auto& c : candidates) passed += c.verification->passed ? 1 : 0;
  if (passed > 1) result.warnings.push_back("several sign branches verify; kept " + result.chosen.branch);
  return result;
}

const RatFunc& need(const CheckResult& r, const std::string& name) {
  const RatFunc* f = r.invariant(name);
  if (!f) throw Error(r.theorem + " did not produce " + name);
  return *f;
}

}  // namespace

MapResult map_painleve1(const OdeCubic& source, const CheckResult& p1, const VerifyOptions& opts) {
  const RatFunc& I1 = need(p1, "I1");
  const RatFunc& I2 = need(p1, "I2");
  Expr t = extract_root(12 * I1, 5);
  Expr x_new = normalize(pow(t, -1));
  Expr u = normalize(to_expr(I2) / (12 * t));
  Expr r = extract_root(to_ratfunc(u), 2);
  std::vector<PointMap> candidates = {
      PointMap{x_new, normalize(r), "y+", std::nullopt, std::nullopt},
      PointMap{x_new, normalize(-r), "y-", std::nullopt, std::nullopt},
  };
  check_invertible(candidates.front());
  return arbitrate(source, candidates, {Target::painleve1(), Target::painleve1()}, opts, false);
}

MapResult map_painleve2(const OdeCubic& source, const CheckResult& p2, const JValue& J,
                        const VerifyOptions& opts, bool as_printed) {
  const RatFunc& I6 = need(p2, "I6");
  const RatFunc& I9 = need(p2, "I9");
  Expr s = extract_root(2500 * I9, 6);
  Expr y_new = normalize(pow(s, -1));
  Expr first = as_printed ? to_expr(I6) * 5 / s : to_expr(I6) * 5 / pow(s, 2);
  std::vector<PointMap> candidates;
  std::vector<Target> targets;
  for (int sign : {1, -1}) {
    Expr j = normalize(sign * J.value);
    Expr x_new = normalize(first - Rational(3, 2) * j * s);
    candidates.push_back(PointMap{x_new, y_new, sign > 0 ? "J+" : "J-", j, std::nullopt});
    targets.push_back(Target::painleve2(j));
  }
  check_invertible(candidates.front());
  MapResult result = arbitrate(source, candidates, targets, opts, true);
  if (J.value.is_zero()) result.warnings.push_back("J = 0: the two sign branches coincide");
  return result;
}

OdeCubic pullback_ode(const OdeCubic& target, const Expr& x_new, const Expr& y_new) {
  const Jet j = jet_of(x_new, y_new);
  Expr jac = normalize(j.Xx * j.Yy - j.Xy * j.Yx);
  if (is_identically_zero(jac).zero()) {
    throw DegenerateMap("Jacobian of the map vanishes identically");
  }
  Bindings onto{{"x", x_new}, {"y", y_new}};
  Expr Pt = substitute(target.P, onto);
  Expr Qt = substitute(target.Q, onto);
  Expr Rt = substitute(target.R, onto);
  Expr St = substitute(target.S, onto);
  Expr p = sym::p();
  Expr U = j.Xx + j.Xy * p;
  Expr V = j.Yx + j.Yy * p;
  Expr Y2 = j.Yxx + 2 * j.Yxy * p + j.Yyy * pow(p, 2);
  Expr X2 = j.Xxx + 2 * j.Xxy * p + j.Xyy * pow(p, 2);
  Expr num = Pt * pow(U, 3) + 3 * Qt * pow(U, 2) * V + 3 * Rt * U * pow(V, 2) + St * pow(V, 3) -
             Y2 * U + V * X2;
  try {
    return extract_cubic_coefficients(num / jac);
  } catch (const NotCubicInDerivative& e) {
    throw Error(std::string("pullback left the cubic class (internal error): ") + e.what());
  }
}

}  // namespace painleve
