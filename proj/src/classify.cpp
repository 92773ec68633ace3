#include "painleve/classify.hpp"

#include "painleve/errors.hpp"
#include "painleve/numeric.hpp"
#include "painleve/roots.hpp"

namespace painleve {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds:
      return "holds";
    case Outcome::Fails:
      return "fails";
    case Outcome::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Pass:
      return "pass";
    case CheckVerdict::Fail:
      return "fail";
    case CheckVerdict::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::PainleveI:
      return "PainleveI";
    case ClassKind::PainleveII:
      return "PainleveII";
    case ClassKind::PainleveIIIZeroParams:
      return "PainleveIIIZeroParams";
    case ClassKind::NotEquivalent:
      return "NotEquivalent";
    case ClassKind::Indeterminate:
      return "Indeterminate";
  }
  return "Indeterminate";
}

const RatFunc* CheckResult::invariant(const std::string& name) const {
  for (const auto& [n, v] : invariants) {
    if (n == name) return &v;
  }
  return nullptr;
}

const Condition* CheckResult::failure() const {
  for (const auto& c : conditions) {
    if (c.outcome == Outcome::Fails) return &c;
  }
  return nullptr;
}

namespace {

// Collects conditions in order; stops after the first failure.
class Checker {
 public:
  explicit Checker(std::string theorem) { result_.theorem = std::move(theorem); }

  bool stopped() const { return stopped_; }

  // "X = 0" when want_zero, "X ≢ 0" otherwise.
  void vanishing(const std::string& what, const ZeroVerdict& v, bool want_zero) {
    std::string text = what + (want_zero ? " = 0" : " ≢ 0");
    Outcome o = Outcome::Unknown;
    std::string detail = v.note;
    if (!v.unknown()) {
      bool holds = want_zero ? v.zero() : v.nonzero();
      o = holds ? Outcome::Holds : Outcome::Fails;
      if (!holds) detail = what + (want_zero ? " ≢ 0" : " ≡ 0") + " (" + v.note + ")";
    }
    add(text, o, detail);
  }

  void add(const std::string& text, Outcome o, const std::string& detail) {
    Condition c;
    c.paper_ref = result_.theorem;
    c.label = result_.theorem + " condition " + std::to_string(result_.conditions.size() + 1) +
              ": " + text;
    c.outcome = o;
    c.detail = detail;
    result_.conditions.push_back(std::move(c));
    if (o == Outcome::Fails) stopped_ = true;
    if (o == Outcome::Unknown) unknown_ = true;
  }

  // Aborts the list when a stage cannot be computed.
  void abort(const std::string& why) {
    result_.warnings.push_back(why);
    stopped_ = true;
    unknown_ = true;
  }

  CheckResult finish() {
    if (result_.failure()) {
      result_.verdict = CheckVerdict::Fail;
    } else if (unknown_) {
      result_.verdict = CheckVerdict::Indeterminate;
    } else {
      result_.verdict = CheckVerdict::Pass;
    }
    return std::move(result_);
  }

  CheckResult& result() { return result_; }

 private:
  CheckResult result_;
  bool stopped_ = false;
  bool unknown_ = false;
};

// Condition 1 shared by all three theorems.
void first_condition(Checker& c, Pipeline& pl) {
  const ZeroVerdict& a = pl.A_verdict();
  const ZeroVerdict& b = pl.B_verdict();
  const std::string text = "F = 0 with α ≢ 0 (A ≢ 0 or B ≢ 0)";
  if (a.zero() && b.zero()) {
    c.add(text, Outcome::Fails, "α ≡ 0 (A ≡ 0 and B ≡ 0)");
    return;
  }
  if (!a.nonzero() && !b.nonzero()) {
    c.add(text, Outcome::Unknown, "cannot decide whether α vanishes");
    c.abort("no usable branch: A is " + to_string(a.verdict) + ", B is " + to_string(b.verdict));
    return;
  }
  const ZeroVerdict& f = pl.f_condition().verdict;
  if (f.zero()) {
    c.add(text, Outcome::Holds, f.note);
  } else if (f.nonzero()) {
    c.add(text, Outcome::Fails, "F ≢ 0 (" + f.note + ")");
  } else {
    c.add(text, Outcome::Unknown, f.note);
  }
}

void equals_constant(Checker& c, Pipeline& pl, const std::string& what, const RatFunc& value,
                     const Rational& k) {
  ZeroVerdict v = pl.zero_test(value - pl.constant(k));
  std::string text = what + " = " + k.get_str();
  if (v.unknown()) {
    c.add(text, Outcome::Unknown, v.note);
  } else if (v.zero()) {
    c.add(text, Outcome::Holds, v.note);
  } else {
    c.add(text, Outcome::Fails, what + " = " + to_string(to_expr(value)) + " ≠ " + k.get_str());
  }
}

bool depends_on_xy(const RatFunc& f) {
  const RingPtr& ring = f.ring();
  if (!ring) return false;
  std::uint32_t support = f.support();
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (!(support & (1u << i))) continue;
    Expr s = ring->symbol(i).to_expr();
    if (depends_on(s, Var::X) || depends_on(s, Var::Y)) return true;
  }
  return false;
}

}  // namespace

CheckResult check_painleve1(Pipeline& pl) {
  Checker c("Theorem 1");
  try {
    first_condition(c, pl);
    if (!c.stopped()) c.vanishing("Ω", pl.zero_test(pl.Omega().value()), true);
    if (!c.stopped()) c.vanishing("N", pl.zero_test(pl.N().value()), true);
    if (!c.stopped()) c.vanishing("W", pl.zero_test(pl.W().value()), true);
    if (!c.stopped()) c.vanishing("V", pl.zero_test(pl.V().value()), true);
    if (!c.stopped()) c.vanishing("Θ", pl.zero_test(pl.Theta().value()), false);
    if (!c.stopped()) c.vanishing("L₁", pl.zero_test(pl.L1().value()), false);
  } catch (const Error& e) {
    c.abort(e.what());
  }
  CheckResult r = c.finish();
  if (r.verdict == CheckVerdict::Pass) {
    const RatFunc& L = pl.L().value();
    const RatFunc& L1 = pl.L1().value();
    const RatFunc& T = pl.Theta().value();
    r.invariants.emplace_back("I1", pow(L1, 4) / pow(L, 5));
    r.invariants.emplace_back("I2", T * T / L);
  }
  return r;
}

namespace {

// J^2 and one square root of it; returns nullopt when J^2 is not constant.
std::optional<JValue> recover_J(Pipeline& pl, const RatFunc& I3, const RatFunc& I6,
                                const RatFunc& I9, std::vector<std::string>& warnings) {
  if (pl.zero_test(I9).zero()) {
    warnings.push_back("I9 vanishes identically; J is undefined");
    return std::nullopt;
  }
  RatFunc k = Rational(1, 50) * (pl.constant(4) + 10 * I6 - 60 * I3);
  RatFunc j2 = k * k / I9;
  if (!depends_on_xy(j2)) return JValue{j2, extract_root(j2, 2), true};
  // J^2 involves atoms of x, y that the canonical form cannot cancel; accept
  // it when seeded samples agree.
  Expr e = to_expr(j2);
  std::vector<std::string> names = free_symbols(e);
  RationalSampler sampler(pl.zero_options().seed);
  std::optional<Real> first;
  std::map<std::string, Rational> params;
  for (int i = 0, valid = 0; i < 100 && valid < pl.zero_options().samples; ++i) {
    NumericPoint pt;
    for (const auto& n : names) {
      if (n == "x" || n == "y") {
        pt[n] = sampler.draw(1, 2);
      } else {
        if (!params.count(n)) params[n] = sampler.draw(1, 2);
        pt[n] = params[n];
      }
    }
    try {
      Real v = evaluate_numeric(e, pt, pl.zero_options().digits);
      ++valid;
      if (!first) {
        first = v;
      } else if (abs(v - *first) > pow(Real(10), -20) * (abs(*first) > 1 ? abs(*first) : Real(1))) {
        warnings.push_back("J is not constant at sample points");
        return std::nullopt;
      }
    } catch (const Error&) {
    }
  }
  if (!first) {
    warnings.push_back("J could not be evaluated at any sample point");
    return std::nullopt;
  }
  warnings.push_back("J^2 is constant only numerically (to 1e-20); reported unsimplified");
  return JValue{j2, extract_root(j2, 2), false};
}

}  // namespace

CheckResult check_painleve2(Pipeline& pl, std::optional<JValue>* j) {
  Checker c("Theorem 2");
  RatFunc I1;
  try {
    first_condition(c, pl);
    if (!c.stopped()) c.vanishing("Ω", pl.zero_test(pl.Omega().value()), true);
    if (!c.stopped()) c.vanishing("M", pl.zero_test(pl.M().value()), false);
    if (!c.stopped()) {
      const RatFunc& N = pl.N().value();
      I1 = pl.M().value() / (N * N);
      equals_constant(c, pl, "I₁ = M/N²", I1, Rational(18, 5));
    }
  } catch (const Error& e) {
    c.abort(e.what());
  }
  CheckResult r = c.finish();
  if (r.verdict != CheckVerdict::Pass) return r;
  try {
    const RatFunc& N = pl.N().value();
    const RatFunc& A = pl.A();
    const RatFunc& B = pl.B();
    const Pseudo& xi = pl.xi();
    RatFunc I3 = pl.Gamma().value() / pl.M().value();
    RatFunc I3x = derivative(I3, Var::X);
    RatFunc I3y = derivative(I3, Var::Y);
    RatFunc I6 = (B * I3x - A * I3y) / N;
    RatFunc t = xi.value(0) * I3x + xi.value(1) * I3y;
    RatFunc I9 = t * t / (N * N * N);
    r.invariants.emplace_back("I1", I1);
    r.invariants.emplace_back("I3", I3);
    r.invariants.emplace_back("I6", I6);
    r.invariants.emplace_back("I9", I9);
    auto J = recover_J(pl, I3, I6, I9, r.warnings);
    if (J) {
      r.invariants.emplace_back("J^2", J->squared);
      r.warnings.push_back("J is determined up to sign: J = ±(" + to_string(J->value) + ")");
    } else {
      r.verdict = CheckVerdict::Indeterminate;
    }
    if (j) *j = J;
  } catch (const Error& e) {
    r.warnings.push_back(e.what());
    r.verdict = CheckVerdict::Indeterminate;
  }
  return r;
}

CheckResult check_painleve3zero(Pipeline& pl) {
  Checker c("Theorem 3");
  RatFunc I1;
  try {
    first_condition(c, pl);
    if (!c.stopped()) c.vanishing("Ω", pl.zero_test(pl.Omega().value()), true);
    if (!c.stopped()) c.vanishing("M", pl.zero_test(pl.M().value()), false);
    if (!c.stopped()) {
      const RatFunc& N = pl.N().value();
      I1 = pl.M().value() / (N * N);
      equals_constant(c, pl, "I₁ = M/N²", I1, Rational(3, 5));
    }
  } catch (const Error& e) {
    c.abort(e.what());
  }
  CheckResult r = c.finish();
  if (r.verdict == CheckVerdict::Pass) {
    r.invariants.emplace_back("I1", I1);
    try {
      r.invariants.emplace_back("I3", pl.Gamma().value() / pl.M().value());
    } catch (const Error& e) {
      r.warnings.push_back(e.what());
    }
  }
  return r;
}

const CheckResult& Classification::passing() const {
  if (kind == ClassKind::PainleveII) return p2;
  if (kind == ClassKind::PainleveIIIZeroParams) return p3;
  return p1;
}

Classification classify(Pipeline& pl) {
  Classification c;
  c.p1 = check_painleve1(pl);
  c.p2 = check_painleve2(pl, &c.J);
  c.p3 = check_painleve3zero(pl);
  int passes = 0;
  for (const CheckResult* r : {&c.p1, &c.p2, &c.p3}) {
    if (r->verdict == CheckVerdict::Pass) ++passes;
  }
  if (passes > 1) {
    c.warnings.push_back("more than one theorem passed; classes should be exclusive");
  }
  if (c.p1.verdict == CheckVerdict::Pass) {
    c.kind = ClassKind::PainleveI;
  } else if (c.p2.verdict == CheckVerdict::Pass) {
    c.kind = ClassKind::PainleveII;
  } else if (c.p3.verdict == CheckVerdict::Pass) {
    c.kind = ClassKind::PainleveIIIZeroParams;
  } else {
    bool all_failed = true;
    for (const CheckResult* r : {&c.p1, &c.p2, &c.p3}) {
      if (r->verdict == CheckVerdict::Fail) {
        c.reasons.push_back(*r->failure());
      } else {
        all_failed = false;
        for (const auto& cond : r->conditions) {
          if (cond.outcome == Outcome::Unknown) c.reasons.push_back(cond);
        }
      }
    }
    c.kind = all_failed ? ClassKind::NotEquivalent : ClassKind::Indeterminate;
  }
  for (const auto& d : pl.diagnostics()) c.warnings.push_back(d);
  for (const CheckResult* r : {&c.p1, &c.p2, &c.p3}) {
    for (const auto& w : r->warnings) {
      bool ours = r == &c.passing() || c.kind == ClassKind::NotEquivalent ||
                  c.kind == ClassKind::Indeterminate;
      if (ours) c.warnings.push_back(r->theorem + ": " + w);
    }
  }
  bool has_params = false;
  for (const Expr& e : {pl.ode().P, pl.ode().Q, pl.ode().R, pl.ode().S}) {
    for (const auto& s : free_symbols(e)) {
      if (s != "x" && s != "y" && s != "p") has_params = true;
    }
  }
  if (has_params && c.kind != ClassKind::NotEquivalent) {
    c.warnings.push_back(
        "parameters are treated as generic; special parameter values may violate the "
        "nonvanishing conditions");
  }
  return c;
}

Classification classify(const OdeCubic& ode, const ZeroTestOptions& zero) {
  Pipeline pl(ode, zero);
  return classify(pl);
}

std::vector<std::pair<std::string, Expr>> pipeline_values(Pipeline& pl) {
  std::vector<std::pair<std::string, Expr>> out;
  out.emplace_back("A", to_expr(pl.A()));
  out.emplace_back("B", to_expr(pl.B()));
  auto attempt = [&](auto&& fn) {
    try {
      fn();
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  attempt([&] {
    const FCondition& f = pl.f_condition();
    out.emplace_back("G", to_expr(f.G));
    out.emplace_back("H", to_expr(f.H));
    out.emplace_back("F^5", to_expr(f.F5));
  });
  bool ok = attempt([&] { pl.branch(); });
  if (!ok) return out;
  attempt([&] { out.emplace_back("N", pl.N().expr()); });
  attempt([&] {
    out.emplace_back("phi1", to_expr(pl.phi().phi1));
    out.emplace_back("phi2", to_expr(pl.phi().phi2));
  });
  attempt([&] { out.emplace_back("M", pl.M().expr()); });
  attempt([&] { out.emplace_back("Omega", pl.Omega().expr()); });
  attempt([&] {
    out.emplace_back("omega1", pl.omega().expr(0));
    out.emplace_back("omega2", pl.omega().expr(1));
  });
  attempt([&] { out.emplace_back("Theta", pl.Theta().expr()); });
  attempt([&] {
    out.emplace_back("theta1", pl.theta().expr(0));
    out.emplace_back("theta2", pl.theta().expr(1));
  });
  attempt([&] { out.emplace_back("L", pl.L().expr()); });
  attempt([&] { out.emplace_back("L1", pl.L1().expr()); });
  attempt([&] { out.emplace_back("W", pl.W().expr()); });
  attempt([&] { out.emplace_back("V", pl.V().expr()); });
  attempt([&] {
    out.emplace_back("gamma1", pl.gamma().expr(0));
    out.emplace_back("gamma2", pl.gamma().expr(1));
  });
  attempt([&] {
    out.emplace_back("xi1", pl.xi().expr(0));
    out.emplace_back("xi2", pl.xi().expr(1));
  });
  attempt([&] { out.emplace_back("Gamma", pl.Gamma().expr()); });
  return out;
}

}  // namespace painleve
