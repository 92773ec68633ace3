// painleve_cli: classify y'' = P + 3Q y' + 3R y'^2 + S y'^3 against the
// Painleve I, II and III (zero parameters) equations.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "painleve/errors.hpp"
#include "painleve/report.hpp"

using namespace painleve;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNotEquivalent = 2;
constexpr int kIndeterminate = 3;

constexpr const char* kNoMapWarning =
    "Theorem 3: \"we can not write an explicit change of variables via invariants of the "
    "equation because they are constants\"";

struct Config {
  std::string rhs;
  std::string P, Q3, R3, S;
  std::vector<std::string> params;
  std::uint64_t seed = kDefaultSeed;
  int samples = 20;
  int precision = 0;
  bool json = false;
  bool text = false;
  bool as_printed = false;
  std::string target = "PI";
  std::string x_new, y_new, J;
};

void add_input(CLI::App* app, Config& c) {
  app->add_option("--rhs", c.rhs, "right-hand side in x, y, p (p stands for y')");
  app->add_option("--P", c.P, "coefficient of 1");
  app->add_option("--Q3", c.Q3, "raw coefficient of y' (stored Q is this over 3)");
  app->add_option("--R3", c.R3, "raw coefficient of y'^2 (stored R is this over 3)");
  app->add_option("--S", c.S, "coefficient of y'^3");
  app->add_option("--param", c.params, "parameter binding name=value (repeatable)");
}

void add_common(CLI::App* app, Config& c) {
  app->add_option("--seed", c.seed, "seed for numeric sampling");
  app->add_option("--samples", c.samples, "verification sample count")->check(CLI::PositiveNumber);
  app->add_option("--precision", c.precision, "decimal digits for numeric checks")
      ->check(CLI::Range(20, 1000));
  auto* j = app->add_flag("--json", c.json, "JSON report");
  auto* t = app->add_flag("--text", c.text, "text report (default)");
  j->excludes(t);
}

void add_map_inputs(CLI::App* app, Config& c, bool need_map) {
  app->add_option("--target", c.target, "target equation")
      ->check(CLI::IsMember({"PI", "PII"}));
  auto* x = app->add_option("--x-new", c.x_new, "new independent variable x~(x, y)");
  auto* y = app->add_option("--y-new", c.y_new, "new dependent variable y~(x, y)");
  app->add_option("--J", c.J, "Painleve II parameter of the target");
  if (need_map) {
    x->required();
    y->required();
  }
}

ZeroTestOptions zero_options(const Config& c) {
  ZeroTestOptions z;
  z.seed = c.seed;
  if (c.precision) z.digits = static_cast<unsigned>(c.precision);
  return z;
}

VerifyOptions verify_options(const Config& c) {
  VerifyOptions v;
  v.seed = c.seed;
  v.samples = c.samples;
  if (c.precision) v.digits = static_cast<unsigned>(c.precision);
  return v;
}

Bindings bindings(const Config& c) {
  Bindings b;
  for (const auto& s : c.params) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--param", "expected name=value, got '" + s + "'");
    }
    std::string name = s.substr(0, eq);
    if (name == "x" || name == "y" || name == "p") {
      throw CLI::ValidationError("--param", "cannot bind the variable " + name);
    }
    b[name] = parse_expression(s.substr(eq + 1), {.rational_exponents = true});
  }
  return b;
}

OdeCubic input_ode(const Config& c) {
  const bool raw = !c.P.empty() || !c.Q3.empty() || !c.R3.empty() || !c.S.empty();
  if (c.rhs.empty() == !raw) {
    throw CLI::ValidationError("input", "give exactly one of --rhs or --P/--Q3/--R3/--S");
  }
  OdeCubic ode;
  if (!c.rhs.empty()) {
    ode = extract_cubic_coefficients(parse_expression(c.rhs));
  } else {
    auto part = [](const std::string& s) { return s.empty() ? Expr(0) : parse_expression(s); };
    ode = ode_from_raw(part(c.P), part(c.Q3), part(c.R3), part(c.S));
  }
  Bindings b = bindings(c);
  return b.empty() ? ode : substitute(ode, b);
}

Target target_of(const Config& c) {
  if (c.target == "PI") return Target::painleve1();
  if (c.J.empty()) throw CLI::ValidationError("--J", "target PII needs --J");
  Expr j = parse_expression(c.J, {.rational_exponents = true});
  Bindings b = bindings(c);
  return Target::painleve2(b.empty() ? j : substitute(j, b));
}

int class_exit(ClassKind k) {
  switch (k) {
    case ClassKind::NotEquivalent:
      return kNotEquivalent;
    case ClassKind::Indeterminate:
      return kIndeterminate;
    default:
      return kOk;
  }
}

int emit(const Report& r, const Config& c, int code) {
  std::cout << emit_report(r, c.json ? ReportMode::Json : ReportMode::Text);
  return code;
}

int run_classify(const Config& c, bool all_values, bool with_map) {
  OdeCubic ode = input_ode(c);
  Pipeline pl(ode, zero_options(c));
  Classification cls = classify(pl);
  Report r = report_from(cls, ode);
  r.subcommand = with_map ? "map" : (all_values ? "invariants" : "classify");
  if (all_values) {
    auto values = pipeline_values(pl);
    r.invariants.insert(r.invariants.begin(), values.begin(), values.end());
  }
  int code = class_exit(cls.kind);
  if (!with_map) return emit(r, c, code);

  try {
    if (cls.kind == ClassKind::PainleveI) {
      attach_map(r, map_painleve1(ode, cls.p1, verify_options(c)));
    } else if (cls.kind == ClassKind::PainleveII) {
      attach_map(r, map_painleve2(ode, cls.p2, *cls.J, verify_options(c), c.as_printed));
    } else if (cls.kind == ClassKind::PainleveIIIZeroParams) {
      r.warnings.push_back(kNoMapWarning);
    }
  } catch (const Error& e) {
    r.warnings.push_back(std::string("map: ") + e.what());
    code = kIndeterminate;
  }
  return emit(r, c, code);
}

int run_verify(const Config& c) {
  OdeCubic ode = input_ode(c);
  Target t = target_of(c);
  PointMap m{parse_expression(c.x_new, {.rational_exponents = true}),
             parse_expression(c.y_new, {.rational_exponents = true}), "given",
             t.kind == Target::Kind::PainleveII ? std::optional<Expr>(t.J) : std::nullopt,
             std::nullopt};
  Bindings b = bindings(c);
  if (!b.empty()) {
    m.x_new = substitute(m.x_new, b);
    m.y_new = substitute(m.y_new, b);
  }
  Report r;
  r.subcommand = "verify";
  r.ode = ode;
  try {
    m.verification = verify_map(ode, t, m, verify_options(c));
  } catch (const Error& e) {
    r.warnings.push_back(std::string("verify: ") + e.what());
    r.map = m;
    return emit(r, c, kIndeterminate);
  }
  r.map = m;
  if (!m.verification->note.empty()) r.warnings.push_back(m.verification->note);
  return emit(r, c, m.verification->passed ? kOk : kNotEquivalent);
}

int run_pullback(const Config& c) {
  Target t = target_of(c);
  Expr x = parse_expression(c.x_new, {.rational_exponents = true});
  Expr y = parse_expression(c.y_new, {.rational_exponents = true});
  Bindings b = bindings(c);
  if (!b.empty()) {
    x = substitute(x, b);
    y = substitute(y, b);
  }
  Report r;
  r.subcommand = "pullback";
  r.ode = t.ode();
  r.pulled_back = pullback_ode(t.ode(), x, y);
  return emit(r, c, kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-equivalence of y'' = P + 3Q y' + 3R y'^2 + S y'^3 to Painleve I, II, III"};
  app.require_subcommand(1);
  Config c;

  auto* cls = app.add_subcommand("classify", "run the three theorem checks");
  add_input(cls, c);
  add_common(cls, c);

  auto* inv = app.add_subcommand("invariants", "classify and list every pipeline value");
  add_input(inv, c);
  add_common(inv, c);

  auto* map = app.add_subcommand("map", "classify and construct a verified change of variables");
  add_input(map, c);
  add_common(map, c);
  map->add_flag("--p2zam-as-printed", c.as_printed,
                "use 5*I6/s instead of 5*I6/s^2 in the Painleve II map");

  auto* ver = app.add_subcommand("verify", "check a given change of variables numerically");
  add_input(ver, c);
  add_common(ver, c);
  add_map_inputs(ver, c, true);

  auto* pb = app.add_subcommand("pullback", "pull a target equation back through a map");
  add_common(pb, c);
  add_map_inputs(pb, c, true);
  pb->add_option("--param", c.params, "parameter binding name=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cls) return run_classify(c, false, false);
    if (*inv) return run_classify(c, true, false);
    if (*map) return run_classify(c, false, true);
    if (*ver) return run_verify(c);
    if (*pb) return run_pullback(c);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotCubicInDerivative& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIndeterminate;
  }
  return kUsage;
}
