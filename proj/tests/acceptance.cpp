// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "painleve/errors.hpp"
#include "support.hpp"

using namespace painleve;
using namespace painleve::testing;

namespace {

struct Tally {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

bool eq(const RatFunc& f, const std::string& s) { return same(to_expr(f), s); }

void c1(Tally& o) {
  Pipeline pl(ode_of(kPI));
  o.require(pl.N().value().is_zero(), "N = 0");
  o.require(pl.Omega().value().is_zero(), "Omega = 0");
  o.require(eq(pl.Theta().value(), "-y/12"), "Theta = -y/12");
  o.require(eq(pl.L().value(), "x/1728"), "L = x/1728");
  o.require(eq(pl.L1().value(), "-1/20736"), "L1 = -1/12^4");
  o.require(pl.W().value().is_zero(), "W = 0");
  o.require(pl.V().value().is_zero(), "V = 0");
  Classification c = classify(pl);
  o.require(c.p1.verdict == CheckVerdict::Pass, "Theorem 1 passes");
  o.require(c.kind == ClassKind::PainleveI, "class PainleveI");
  if (o.pass) {
    o.require(eq(*c.p1.invariant("I1"), "1/(12*x^5)"), "I1 = 1/(12x^5)");
    o.require(eq(*c.p1.invariant("I2"), "12*y^2/x"), "I2 = 12y^2/x");
  }
  if (o.pass) o.note << "N, Omega, Theta, L, L1, W, V, I1, I2 exact";
}

void c2(Tally& o) {
  Pipeline pl(ode_of(kPII));
  o.require(eq(pl.N().value(), "4"), "N = 4");
  o.require(eq(pl.M().value(), "288/5"), "M = 288/5");
  o.require(eq(pl.xi().value(0), "-24/(5*y)"), "xi1 = -24/(5y)");
  o.require(eq(pl.Gamma().value(), "48/25*(2*y^3+x*y+a)/y^3"), "Gamma");
  Classification c = classify(pl);
  o.require(c.kind == ClassKind::PainleveII, "class PainleveII");
  if (!o.pass) return;
  o.require(eq(*c.p2.invariant("I1"), "18/5"), "I1 = 18/5");
  o.require(eq(*c.p2.invariant("I3"), "(2*y^3+x*y+a)/(30*y^3)"), "I3 = Gamma/M");
  o.require(eq(*c.p2.invariant("I6"), "(2*x*y+3*a)/(10*y^3)"), "I6");
  o.require(eq(*c.p2.invariant("I9"), "1/(2500*y^6)"), "I9");
  o.require(c.J && (same(c.J->value, "a") || same(c.J->value, "-a")), "J = ±a");
  if (o.pass) o.note << "N, M, I1, xi1, Gamma, I3, I6, I9 exact; J = ±(" << c.J->value << ")";
}

void c3(Tally& o) {
  Classification c = classify(ode_of(kPIII));
  o.require(c.p3.verdict == CheckVerdict::Pass, "Theorem 3 passes");
  o.require(c.p1.verdict == CheckVerdict::Fail, "Theorem 1 fails");
  o.require(c.p2.verdict == CheckVerdict::Fail, "Theorem 2 fails");
  if (c.p3.verdict == CheckVerdict::Pass) {
    o.require(eq(*c.p3.invariant("I1"), "3/5"), "I1 = 3/5");
    o.require(eq(*c.p3.invariant("I3"), "1/15"), "I3 = 1/15");
  }
  if (o.pass) {
    o.note << "I1 = 3/5, I3 = 1/15; Theorem 1 stops at \"" << c.p1.failure()->label
           << "\", Theorem 2 at \"" << c.p2.failure()->label << "\"";
  }
}

void c4(Tally& o) {
  OdeCubic ode = ode_of(kExample1);
  Classification c = classify(ode);
  o.require(c.kind == ClassKind::PainleveI, "class PainleveI");
  if (!o.pass) return;
  o.require(eq(*c.p1.invariant("I1"), "1/(12*x^5*sin(y)^5)"), "I1 closed form");
  o.require(eq(*c.p1.invariant("I2"), "12*x*cos(y)^2/sin(y)"), "I2 closed form");
  MapResult m = map_painleve1(ode, c.p1);
  bool plus = same(m.chosen.y_new, "x*cos(y)");
  bool minus = same(m.chosen.y_new, "-x*cos(y)");
  o.require(same(m.chosen.x_new, "x*sin(y)") && (plus || minus), "map (x sin y, x cos y)");
  o.require(m.chosen.verification && m.chosen.verification->passed &&
                m.chosen.verification->samples == 20 && m.chosen.verification->max_residual < 1e-9,
            "verify residual < 1e-9 over 20 samples");
  if (o.pass) {
    o.note << "map (" << m.chosen.x_new << ", " << m.chosen.y_new << ") branch " << m.chosen.branch
           << ", residual " << m.chosen.verification->max_residual;
  }
}

void c5(Tally& o) {
  OdeCubic sym_ode = ode_of(kKamke);
  Classification c = classify(sym_ode);
  o.require(c.kind == ClassKind::PainleveII, "symbolic Kamke is PainleveII");
  if (!o.pass) return;
  Expr want = E("-(a/2)^(1/2)*d/b");
  o.require(same(c.J->value, want) || same(c.J->value, -want), "J = ±sqrt(a/2) d/b");
  MapResult sm = map_painleve2(sym_ode, c.p2, *c.J);
  o.require(same(*sm.chosen.J, want), "verified symbolic branch has J = -sqrt(a/2) d/b");

  OdeCubic num = ode_of("2*y^3 - 3*x*y - 5*y - 7");
  Classification n = classify(num);
  o.require(n.kind == ClassKind::PainleveII, "a=2,b=3,c=5,d=7 is PainleveII");
  if (!o.pass) return;
  MapResult m = map_painleve2(num, n.p2, *n.J);
  o.require(same(*m.chosen.J, "-7/3"), "J = -7/3");
  o.require(m.chosen.verification->passed && m.chosen.verification->max_residual < 1e-9,
            "numeric map verifies");
  Classification neg = classify(ode_of(kKamkeNegCubic));
  if (o.pass) {
    o.note << "J = " << *sm.chosen.J << "; numeric J = " << *m.chosen.J << ", map ("
           << m.chosen.x_new << ", " << m.chosen.y_new << "), residual "
           << m.chosen.verification->max_residual << "; with -a*y^3 instead J^2 = "
           << to_expr(neg.J->squared);
  }
}

void c6(Tally& o) {
  for (const char* rhs : {"0", "y"}) {
    Classification c = classify(ode_of(rhs));
    const Condition* f = c.p1.failure();
    o.require(c.kind == ClassKind::NotEquivalent && f && f->detail.find("α ≡ 0") != std::string::npos,
              std::string("y'' = ") + rhs + " rejected with α ≡ 0");
  }
  Classification c = classify(ode_of("6*y^2"));
  const Condition* f = c.p1.failure();
  o.require(c.kind == ClassKind::NotEquivalent && f &&
                f->label.rfind("Theorem 1 condition 7", 0) == 0 &&
                f->detail.find("L₁ ≡ 0") != std::string::npos,
            "y'' = 6y^2 rejected at Theorem 1 condition 7");
  if (o.pass) o.note << "0 and y: α ≡ 0; 6y^2: " << f->label << " (" << f->detail << ")";
}

void c7(Tally& o) {
  double worst = 0;
  int agreements = 0, theta_skipped = 0;
  for (int target = 0; target < 2; ++target) {
    Target t = target ? Target::painleve2(Expr(1)) : Target::painleve1();
    for (const auto& [xs, ys] : kFuzzMaps) {
      std::string tag = (target ? "PII " : "PI ") + xs + ", " + ys;
      OdeCubic src = pullback_ode(t.ode(), E(xs), E(ys));
      Pipeline pl(src);
      Classification c = classify(pl);
      ClassKind want = target ? ClassKind::PainleveII : ClassKind::PainleveI;
      o.require(c.kind == want, tag + " reclassifies");
      if (c.kind != want) continue;
      MapResult m = target ? map_painleve2(src, c.p2, *c.J) : map_painleve1(src, c.p1);
      double r = m.chosen.verification->max_residual;
      worst = std::max(worst, r);
      o.require(m.chosen.verification->passed && r < 1e-8, tag + " recovered map verifies");
      if (pl.A_verdict().nonzero() && pl.B_verdict().nonzero()) {
        std::vector<std::string> names = {"N", "M", "Omega"};
        if (pl.N().value().is_zero()) names.push_back("Theta");
        else ++theta_skipped;
        for (const auto& name : names) {
          bool ok = pl.zero_test(pl.on_branch(name, true) - pl.on_branch(name, false)).zero();
          o.require(ok, tag + " branches agree on " + name);
          ++agreements;
        }
      }
    }
  }
  if (o.pass) {
    o.note << "20 pullbacks reclassified, worst map residual " << worst << "; " << agreements
           << " branch agreements; Theta compared on N = 0 instances only (" << theta_skipped
           << " PII instances skipped, see README)";
  }
}

void c8(Tally& o) {
  std::mt19937_64 rng(20140611);
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    Pipeline pl(random_ode(rng, 2));
    const RatFunc& a = pl.A();
    const RatFunc& b = pl.B();
    for (bool use_a : {true, false}) {
      if ((use_a ? a : b).is_zero()) continue;
      RatFunc id = pl.d(b, 1, 0) - pl.d(a, 0, 1) + Rational(6, 5) * pl.on_branch("N", use_a) -
                   pl.on_branch("phi2", use_a) * a + pl.on_branch("phi1", use_a) * b;
      o.require(id.is_zero(), "identity (1) on random instance " + std::to_string(i));
      ++checked;
    }
  }
  int corpus = 0;
  for (const auto& rhs : {kPII, kPIII, kKamke, std::string("2*y^3 - 3*x*y - 5*y - 7")}) {
    Pipeline pl(ode_of(rhs));
    RatFunc n = pl.N().value();
    const Phi& phi = pl.phi();
    const Pseudo& xi = pl.xi();
    o.require((xi.value(0) - pl.d(n, 0, 1) - 2 * phi.phi2 * n).is_zero(), "xi1 relation on " + rhs);
    o.require((xi.value(1) + pl.d(n, 1, 0) + 2 * phi.phi1 * n).is_zero(), "xi2 relation on " + rhs);
    o.require((pl.M().value() + pl.A() * xi.value(0) + pl.B() * xi.value(1)).is_zero(),
              "M = -A xi1 - B xi2 on " + rhs);
    ++corpus;
  }
  if (o.pass) {
    o.note << "identity (1) on 20 random instances (" << checked << " branch evaluations); xi and M "
           << "relations on " << corpus << " corpus equations";
  }
}

void c9(Tally& o) {
  OdeCubic ode = ode_of(kPII);
  Classification c = classify(ode);
  Expr I6 = to_expr(*c.p2.invariant("I6"));
  Expr I9 = to_expr(*c.p2.invariant("I9"));
  Expr a = sym::param("a");
  // With the displayed I6 and I9: (2500 I9)^(1/6) = 1/y for y > 0.
  Expr s = pow(sym::y(), -1);
  o.require(same(pow(s, 6), Expr(2500) * I9), "(2500 I9)^(1/6) = 1/y");
  Expr corrected = Expr(5) * I6 / pow(s, 2) - Rational(3, 2) * a * s;
  Expr first_power = Expr(5) * I6 / s - Rational(3, 2) * a * s;
  o.require(same(corrected, "x"), "corrected form gives x~ = x");
  o.require(!same(first_power, "x"), "5 I6/s form does not give x~ = x");
  std::string rejected;
  try {
    map_painleve2(ode, c.p2, *c.J, {}, true);
  } catch (const BranchVerificationFailed& e) {
    rejected = e.what();
  }
  o.require(!rejected.empty(), "5 I6/s form fails verify_map on both branches");
  MapResult cm = map_painleve2(ode, c.p2, *c.J, {}, false);
  o.require(cm.chosen.verification->passed, "corrected form passes verify_map");
  if (o.pass) {
    o.note << "--p2zam-as-printed x~ = " << normalize(first_power) << " (" << rejected << "); corrected x~ = "
           << normalize(corrected) << " (residual " << cm.chosen.verification->max_residual << ")";
  }
}

}  // namespace

int main() {
  const std::vector<std::function<void(Tally&)>> criteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " [" << secs
              << " s] " << o.note.str() << std::endl;
    failed += !o.pass;
  }
  return failed;
}
