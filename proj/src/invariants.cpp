#include "painleve/invariants.hpp"

#include "painleve/errors.hpp"

namespace painleve {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::UseA:
      return "A";
    case Branch::UseB:
      return "B";
    case Branch::Both:
      return "A and B";
  }
  return "?";
}

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string key(const std::string& name, int i, int j) {
  return name + "_" + std::to_string(i) + "." + std::to_string(j);
}

}  // namespace

Pipeline::Pipeline(const OdeCubic& ode, const ZeroTestOptions& zero) : ode_(ode), zero_(zero) {
  auto fs = to_ratfuncs({ode.P, ode.Q, ode.R, ode.S, sym::x(), sym::y()});
  ring_ = fs[4].ring();
  P_ = fs[0];
  Q_ = fs[1];
  R_ = fs[2];
  S_ = fs[3];
  scalars_[key("P", 0, 0)] = P_;
  scalars_[key("Q", 0, 0)] = Q_;
  scalars_[key("R", 0, 0)] = R_;
  scalars_[key("S", 0, 0)] = S_;
}

RatFunc Pipeline::d(const RatFunc& f, int i, int j) const {
  RatFunc r = f;
  for (int k = 0; k < i; ++k) r = derivative(r, Var::X);
  for (int k = 0; k < j; ++k) r = derivative(r, Var::Y);
  return r;
}

const RatFunc& Pipeline::base(const std::string& name) { return D(name, 0, 0); }

const RatFunc& Pipeline::D(const std::string& name, int i, int j) {
  std::string k = key(name, i, j);
  auto it = scalars_.find(k);
  if (it != scalars_.end()) return it->second;
  if (i == 0 && j == 0) {
    // base fields are registered by the stage that produces them
    if (name == "A") A();
    if (name == "B") B();
    if (name == "N") N();
    if (name == "Theta") Theta();
    if (name == "theta1" || name == "theta2") theta();
    if (name == "L") L();
    if (name == "L1") L1();
    if (name == "gamma1" || name == "gamma2") gamma();
    it = scalars_.find(k);
    if (it == scalars_.end()) throw Error("no field named " + name);
    return it->second;
  }
  RatFunc r = i > 0 ? derivative(D(name, i - 1, j), Var::X) : derivative(D(name, i, j - 1), Var::Y);
  return scalars_.emplace(k, std::move(r)).first->second;
}

const Pseudo& Pipeline::store(Pseudo p) {
  std::string name = p.name;
  return cache_.insert_or_assign(name, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------

const RatFunc& Pipeline::A() {
  auto it = scalars_.find(key("A", 0, 0));
  if (it != scalars_.end()) return it->second;
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  RatFunc a = D("P", 0, 2) - 2 * D("Q", 1, 1) + D("R", 2, 0) + 2 * P * D("S", 1, 0) +
              S * D("P", 1, 0) - 3 * P * D("R", 0, 1) - 3 * R * D("P", 0, 1) -
              3 * Q * D("R", 1, 0) + 6 * Q * D("Q", 0, 1);
  return scalars_.emplace(key("A", 0, 0), std::move(a)).first->second;
}

const RatFunc& Pipeline::B() {
  auto it = scalars_.find(key("B", 0, 0));
  if (it != scalars_.end()) return it->second;
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  RatFunc b = D("S", 2, 0) - 2 * D("R", 1, 1) + D("Q", 0, 2) - 2 * S * D("P", 0, 1) -
              P * D("S", 0, 1) + 3 * S * D("Q", 1, 0) + 3 * Q * D("S", 1, 0) +
              3 * R * D("Q", 0, 1) - 6 * R * D("R", 1, 0);
  return scalars_.emplace(key("B", 0, 0), std::move(b)).first->second;
}

const Pseudo& Pipeline::alpha() {
  auto it = cache_.find("alpha");
  if (it != cache_.end()) return it->second;
  RatFunc b = B();
  RatFunc a = A();
  return store(Pseudo{"alpha", 2, {b, -a}});
}

const ZeroVerdict& Pipeline::A_verdict() {
  if (!a_verdict_) a_verdict_ = zero_test(A());
  return *a_verdict_;
}

const ZeroVerdict& Pipeline::B_verdict() {
  if (!b_verdict_) b_verdict_ = zero_test(B());
  return *b_verdict_;
}

const BranchChoice& Pipeline::branch() {
  if (branch_) return *branch_;
  const ZeroVerdict& a = A_verdict();
  const ZeroVerdict& b = B_verdict();
  BranchChoice c;
  c.a = a;
  c.b = b;
  if (a.nonzero() && b.nonzero()) {
    c.kind = Branch::Both;
  } else if (a.nonzero()) {
    c.kind = Branch::UseA;
  } else if (b.nonzero()) {
    c.kind = Branch::UseB;
  } else {
    throw BothComponentsZero("alpha vanishes: A is " + to_string(a.verdict) + ", B is " +
                             to_string(b.verdict));
  }
  branch_ = c;
  return *branch_;
}

const FCondition& Pipeline::f_condition() {
  if (f_) return *f_;
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  const RatFunc& a = A();
  const RatFunc& b = B();
  RatFunc G = -b * D("B", 1, 0) - 3 * a * D("B", 0, 1) + 4 * b * D("A", 0, 1) + 3 * S * a * a -
              6 * R * b * a + 3 * Q * b * b;
  RatFunc H = -a * D("A", 0, 1) - 3 * b * D("A", 1, 0) + 4 * a * D("B", 1, 0) - 3 * P * b * b +
              6 * Q * a * b - 3 * R * a * a;
  RatFunc F5 = q(1, 3) * (a * G + b * H);
  ZeroVerdict v = zero_test(F5);
  f_ = FCondition{G, H, F5, v};
  return *f_;
}

RatFunc Pipeline::by_policy(const std::string& name, RatFunc (Pipeline::*on)(bool)) {
  const BranchChoice& c = branch();
  RatFunc value = (this->*on)(c.uses_a());
  if (c.kind == Branch::Both && f_condition().verdict.zero()) {
    RatFunc other = (this->*on)(false);
    ZeroVerdict diff = zero_test(value - other);
    agreements_.push_back({name, diff});
    if (!diff.zero()) {
      diagnostics_.push_back("branch formulas for " + name + " disagree (difference is " +
                             to_string(diff.verdict) + ")");
    }
  }
  return value;
}

// ---------------------------------------------------------------------------
// N, phi, M, Omega

RatFunc Pipeline::N_on(bool use_a) {
  const FCondition& f = f_condition();
  if (use_a) return -f.H / (3 * A());
  return f.G / (3 * B());
}

const Pseudo& Pipeline::N() {
  auto it = cache_.find("N");
  if (it != cache_.end()) return it->second;
  RatFunc n = by_policy("N", &Pipeline::N_on);
  scalars_[key("N", 0, 0)] = n;
  return store(Pseudo{"N", 2, {n}});
}

Phi Pipeline::phi_on(bool use_a) {
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  const RatFunc& a = A();
  const RatFunc& b = B();
  const RatFunc& Ax = D("A", 1, 0);
  const RatFunc& Ay = D("A", 0, 1);
  const RatFunc& Bx = D("B", 1, 0);
  const RatFunc& By = D("B", 0, 1);
  if (use_a) {
    RatFunc k = b * P + Ax;
    RatFunc phi1 = -3 * k / (5 * a) + q(3, 5) * Q;
    RatFunc phi2 = 3 * b * k / (5 * a * a) - 3 * (Bx + Ay + 3 * b * Q) / (5 * a) + q(6, 5) * R;
    return {phi1, phi2};
  }
  RatFunc k = a * S - By;
  RatFunc phi1 = -3 * a * k / (5 * b * b) - 3 * (Ay + Bx - 3 * a * R) / (5 * b) - q(6, 5) * Q;
  RatFunc phi2 = 3 * k / (5 * b) - q(3, 5) * R;
  return {phi1, phi2};
}

const Phi& Pipeline::phi() {
  if (phi_) return *phi_;
  const BranchChoice& c = branch();
  Phi v = phi_on(c.uses_a());
  if (c.kind == Branch::Both && f_condition().verdict.zero()) {
    Phi w = phi_on(false);
    for (int i = 0; i < 2; ++i) {
      std::string name = i == 0 ? "phi1" : "phi2";
      ZeroVerdict diff = zero_test(i == 0 ? v.phi1 - w.phi1 : v.phi2 - w.phi2);
      agreements_.push_back({name, diff});
      if (!diff.zero()) {
        diagnostics_.push_back("branch formulas for " + name + " disagree (difference is " +
                               to_string(diff.verdict) + ")");
      }
    }
  }
  phi_ = v;
  return *phi_;
}

RatFunc Pipeline::M_on(bool use_a) {
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  const RatFunc& a = A();
  const RatFunc& b = B();
  const RatFunc n = N().value();
  const RatFunc& Ax = D("A", 1, 0);
  const RatFunc& Ay = D("A", 0, 1);
  const RatFunc& Bx = D("B", 1, 0);
  const RatFunc& By = D("B", 0, 1);
  const RatFunc& Nx = D("N", 1, 0);
  const RatFunc& Ny = D("N", 0, 1);
  if (use_a) {
    return -12 * b * n * (b * P + Ax) / (5 * a) + b * Nx + q(24, 5) * b * n * Q +
           q(6, 5) * n * Bx + q(6, 5) * n * Ay - a * Ny - q(12, 5) * a * n * R;
  }
  return -12 * a * n * (a * S - By) / (5 * b) - a * Ny + q(24, 5) * a * n * R -
         q(6, 5) * n * Ay - q(6, 5) * n * Bx + b * Nx - q(12, 5) * b * n * Q;
}

const Pseudo& Pipeline::M() {
  auto it = cache_.find("M");
  if (it != cache_.end()) return it->second;
  RatFunc m = by_policy("M", &Pipeline::M_on);
  return store(Pseudo{"M", 4, {m}});
}

RatFunc Pipeline::Omega_on(bool use_a) {
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  const RatFunc& a = A();
  const RatFunc& b = B();
  const RatFunc& Ax = D("A", 1, 0);
  const RatFunc& Ay = D("A", 0, 1);
  const RatFunc& Bx = D("B", 1, 0);
  const RatFunc& By = D("B", 0, 1);
  if (use_a) {
    RatFunc a2 = a * a;
    return 2 * b * Ax * (b * P + Ax) / (a2 * a) - (2 * Bx + 3 * b * Q) * Ax / a2 +
           (Ay - 2 * Bx) * b * P / a2 - (b * D("A", 2, 0) + b * b * D("P", 1, 0)) / a2 +
           D("B", 2, 0) / a +
           (3 * Bx * Q + 3 * b * D("Q", 1, 0) - By * P - b * D("P", 0, 1)) / a +
           D("Q", 0, 1) - 2 * D("R", 1, 0);
  }
  RatFunc b2 = b * b;
  return 2 * a * By * (a * S - By) / (b2 * b) + (2 * Ay - 3 * a * R) * By / b2 +
         (Bx - 2 * Ay) * a * S / b2 + (a * D("B", 0, 2) - a * a * D("S", 0, 1)) / b2 -
         D("A", 0, 2) / b + (3 * Ay * R + 3 * a * D("R", 0, 1) - Ax * S - a * D("S", 1, 0)) / b +
         D("R", 1, 0) - 2 * D("Q", 0, 1);
}

const Pseudo& Pipeline::Omega() {
  auto it = cache_.find("Omega");
  if (it != cache_.end()) return it->second;
  RatFunc o = by_policy("Omega", &Pipeline::Omega_on);
  return store(Pseudo{"Omega", 1, {o}});
}

// ---------------------------------------------------------------------------
// omega, Theta, theta

std::pair<RatFunc, RatFunc> Pipeline::omega_on(bool use_a) {
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  const RatFunc& a = A();
  const RatFunc& b = B();
  const RatFunc& Ax = D("A", 1, 0);
  const RatFunc& Ay = D("A", 0, 1);
  const RatFunc& Bx = D("B", 1, 0);
  const RatFunc& By = D("B", 0, 1);
  if (use_a) {
    RatFunc a2 = a * a;
    RatFunc a3 = a2 * a;
    RatFunc w1 = 12 * P * R / (5 * a) - q(54, 25) * Q * Q / a - D("P", 0, 1) / a +
                 6 * D("Q", 1, 0) / (5 * a) -
                 (P * Ay + b * D("P", 1, 0) + D("A", 2, 0)) / (5 * a2) - 2 * Bx * P / (5 * a2) +
                 (3 * Q * Ax - 12 * P * b * Q) / (25 * a2) +
                 (6 * b * b * P * P + 12 * b * P * Ax + 6 * Ax * Ax) / (25 * a3);
    RatFunc w2 = (-5 * b * D("P", 0, 1) + 6 * b * D("Q", 0, 1) + 12 * R * b * P) / (5 * a2) -
                 q(54, 25) * b * Q * Q / a2 -
                 (2 * b * Bx * P + b * Ay * P + b * b * D("P", 1, 0) + b * D("A", 2, 0)) /
                     (5 * a3) -
                 12 * b * b * P * Q / (25 * a3) + 3 * b * Q * Ax / (25 * a3) +
                 (6 * b * Ax * Ax + 6 * b * b * b * P * P + 12 * b * b * Ax * P) / (25 * a3 * a);
    return {w1, w2};
  }
  RatFunc b2 = b * b;
  RatFunc b3 = b2 * b;
  RatFunc w1 = (5 * a * D("S", 1, 0) - 6 * a * D("R", 0, 1) + 12 * Q * a * S) / (5 * b2) -
               q(54, 25) * a * R * R / b2 +
               (2 * a * Ay * S + a * Bx * S + a * a * D("S", 0, 1) - a * D("B", 0, 2)) / (5 * b3) -
               12 * a * a * S * R / (25 * b3) + 3 * a * R * By / (25 * b3) +
               (6 * a * By * By + 6 * a * a * a * S * S - 12 * a * a * By * S) / (25 * b3 * b);
  RatFunc w2 = 12 * S * Q / (5 * b) - q(54, 25) * R * R / b + D("S", 1, 0) / b -
               6 * D("R", 0, 1) / (5 * b) +
               (S * Bx + a * D("S", 0, 1) - D("B", 0, 2)) / (5 * b2) + 2 * Ay * S / (5 * b2) -
               (3 * R * By + 12 * S * a * R) / (25 * b2) +
               (6 * a * a * S * S - 12 * By * a * S + 6 * By * By) / (25 * b3);
  return {w1, w2};
}

const Pseudo& Pipeline::omega() {
  auto it = cache_.find("omega");
  if (it != cache_.end()) return it->second;
  auto [w1, w2] = omega_on(branch().uses_a());
  return store(Pseudo{"omega", -1, {w1, w2}});
}

RatFunc Pipeline::Theta_on(bool use_a) {
  auto w = omega_on(use_a);
  return use_a ? w.first / A() : w.second / B();
}

const Pseudo& Pipeline::Theta() {
  auto it = cache_.find("Theta");
  if (it != cache_.end()) return it->second;
  const Pseudo& w = omega();
  RatFunc t = branch().uses_a() ? w.value(0) / A() : w.value(1) / B();
  // Theta is a pseudoinvariant only where N vanishes, so the two branch
  // formulas are only compared there.
  if (branch().kind == Branch::Both && f_condition().verdict.zero() &&
      zero_test(N().value()).zero()) {
    ZeroVerdict diff = zero_test(t - Theta_on(false));
    agreements_.push_back({"Theta", diff});
    if (!diff.zero()) {
      diagnostics_.push_back("branch formulas for Theta disagree (difference is " +
                             to_string(diff.verdict) + ")");
    }
  }
  scalars_[key("Theta", 0, 0)] = t;
  return store(Pseudo{"Theta", -2, {t}});
}

const Pseudo& Pipeline::theta() {
  auto it = cache_.find("theta");
  if (it != cache_.end()) return it->second;
  const RatFunc t = Theta().value();
  const Phi& f = phi();
  RatFunc t1 = D("Theta", 0, 1) - 2 * f.phi2 * t;
  RatFunc t2 = -D("Theta", 1, 0) + 2 * f.phi1 * t;
  scalars_[key("theta1", 0, 0)] = t1;
  scalars_[key("theta2", 0, 0)] = t2;
  return store(Pseudo{"theta", -1, {t1, t2}});
}

// ---------------------------------------------------------------------------
// L chain

const Pseudo& Pipeline::L() {
  auto it = cache_.find("L");
  if (it != cache_.end()) return it->second;
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  const Pseudo& th = theta();
  const RatFunc t1 = th.value(0);
  const RatFunc t2 = th.value(1);
  const RatFunc T = Theta().value();
  // theta ^ (theta . grad theta) minus the cubic form along theta
  RatFunc l = t1 * t2 * (D("theta2", 0, 1) - D("theta1", 1, 0)) - t2 * t2 * D("theta1", 0, 1) +
              t1 * t1 * D("theta2", 1, 0) - P * t1 * t1 * t1 - 3 * Q * t1 * t1 * t2 -
              3 * R * t1 * t2 * t2 - S * t2 * t2 * t2 - q(1, 2) * T * T;
  scalars_[key("L", 0, 0)] = l;
  return store(Pseudo{"L", -4, {l}});
}

const Pseudo& Pipeline::L1() {
  auto it = cache_.find("L1");
  if (it != cache_.end()) return it->second;
  const RatFunc l = L().value();
  const Pseudo& th = theta();
  const Phi& f = phi();
  const RatFunc& t1 = th.value(0);
  const RatFunc& t2 = th.value(1);
  RatFunc l1 = D("L", 1, 0) * t1 + D("L", 0, 1) * t2 - 4 * l * (f.phi1 * t1 + f.phi2 * t2);
  scalars_[key("L1", 0, 0)] = l1;
  return store(Pseudo{"L1", -5, {l1}});
}

const Pseudo& Pipeline::W() {
  auto it = cache_.find("W");
  if (it != cache_.end()) return it->second;
  const RatFunc l1 = L1().value();
  const Pseudo& th = theta();
  const Phi& f = phi();
  const RatFunc& t1 = th.value(0);
  const RatFunc& t2 = th.value(1);
  RatFunc w = D("L1", 1, 0) * t1 + D("L1", 0, 1) * t2 - 5 * l1 * (f.phi1 * t1 + f.phi2 * t2);
  return store(Pseudo{"W", -6, {w}});
}

const Pseudo& Pipeline::V() {
  auto it = cache_.find("V");
  if (it != cache_.end()) return it->second;
  const RatFunc l1 = L1().value();
  const Phi& f = phi();
  const RatFunc& a = A();
  const RatFunc& b = B();
  RatFunc v = D("L1", 1, 0) * b - D("L1", 0, 1) * a - 5 * l1 * (b * f.phi1 - a * f.phi2);
  return store(Pseudo{"V", -3, {v}});
}

// ---------------------------------------------------------------------------
// gamma, xi, Gamma

std::pair<RatFunc, RatFunc> Pipeline::gamma_on(bool use_a) {
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  const RatFunc& a = A();
  const RatFunc& b = B();
  const RatFunc n = N().value();
  const RatFunc o = Omega().value();
  const RatFunc& Ax = D("A", 1, 0);
  const RatFunc& Ay = D("A", 0, 1);
  const RatFunc& Bx = D("B", 1, 0);
  const RatFunc& By = D("B", 0, 1);
  const RatFunc& Nx = D("N", 1, 0);
  const RatFunc& Ny = D("N", 0, 1);
  if (use_a) {
    RatFunc k = b * P + Ax;
    RatFunc g1 = -6 * b * n * k / (5 * a * a) + 18 * n * b * Q / (5 * a) +
                 6 * n * (Bx + Ay) / (5 * a) - Ny - q(12, 5) * n * R - 2 * o * b;
    RatFunc g2 = -6 * n * k / (5 * a) + Nx + q(6, 5) * n * Q + 2 * o * a;
    return {g1, g2};
  }
  // Mirror image of the A-branch second component under x <-> y, which
  // needs A S - B_y here (A N - B_y is not covariant).
  RatFunc k = a * S - By;
  RatFunc g1 = -6 * n * k / (5 * b) - Ny + q(6, 5) * n * R - 2 * o * b;
  RatFunc g2 = -6 * a * n * k / (5 * b * b) + 18 * n * a * R / (5 * b) -
               6 * n * (Ay + Bx) / (5 * b) + Nx - q(12, 5) * n * Q + 2 * o * a;
  return {g1, g2};
}

const Pseudo& Pipeline::gamma() {
  auto it = cache_.find("gamma");
  if (it != cache_.end()) return it->second;
  const BranchChoice& c = branch();
  auto [g1, g2] = gamma_on(c.uses_a());
  if (c.kind == Branch::Both && f_condition().verdict.zero()) {
    auto other = gamma_on(false);
    for (int i = 0; i < 2; ++i) {
      std::string name = i == 0 ? "gamma1" : "gamma2";
      ZeroVerdict diff = zero_test(i == 0 ? g1 - other.first : g2 - other.second);
      agreements_.push_back({name, diff});
      if (!diff.zero()) {
        diagnostics_.push_back("branch formulas for " + name + " disagree (difference is " +
                               to_string(diff.verdict) + ")");
      }
    }
  }
  scalars_[key("gamma1", 0, 0)] = g1;
  scalars_[key("gamma2", 0, 0)] = g2;
  return store(Pseudo{"gamma", 3, {g1, g2}});
}

const Pseudo& Pipeline::xi() {
  auto it = cache_.find("xi");
  if (it != cache_.end()) return it->second;
  const RatFunc o = Omega().value();
  const Pseudo& g = gamma();
  RatFunc x1 = -2 * o * B() - g.value(0);
  RatFunc x2 = 2 * o * A() - g.value(1);
  return store(Pseudo{"xi", 3, {x1, x2}});
}

const Pseudo& Pipeline::Gamma() {
  auto it = cache_.find("Gamma");
  if (it != cache_.end()) return it->second;
  const RatFunc m = M().value();
  if (zero_test(m).zero()) throw GammaUndefined("M vanishes identically");
  const RatFunc &P = P_, &Q = Q_, &R = R_, &S = S_;
  const Pseudo& g = gamma();
  const RatFunc g1 = g.value(0);
  const RatFunc g2 = g.value(1);
  RatFunc num = g1 * g2 * (D("gamma1", 1, 0) - D("gamma2", 0, 1)) +
                g2 * g2 * D("gamma1", 0, 1) - g1 * g1 * D("gamma2", 1, 0) +
                P * g1 * g1 * g1 + 3 * Q * g1 * g1 * g2 + 3 * R * g1 * g2 * g2 +
                S * g2 * g2 * g2;
  return store(Pseudo{"Gamma", 4, {num / m}});
}

RatFunc Pipeline::on_branch(const std::string& name, bool use_a) {
  if (name == "N") return N_on(use_a);
  if (name == "M") return M_on(use_a);
  if (name == "Omega") return Omega_on(use_a);
  if (name == "Theta") return Theta_on(use_a);
  if (name == "phi1") return phi_on(use_a).phi1;
  if (name == "phi2") return phi_on(use_a).phi2;
  if (name == "omega1") return omega_on(use_a).first;
  if (name == "omega2") return omega_on(use_a).second;
  if (name == "gamma1") return gamma_on(use_a).first;
  if (name == "gamma2") return gamma_on(use_a).second;
  throw Error("no branch formula named " + name);
}

}  // namespace painleve
