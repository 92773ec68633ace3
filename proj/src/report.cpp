#include "painleve/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace painleve {

namespace {

using nlohmann::ordered_json;

std::string residual_text(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", r);
  return buf;
}

ordered_json coefficients_json(const OdeCubic& ode) {
  ordered_json j;
  j["P"] = to_string(ode.P);
  j["Q"] = to_string(ode.Q);
  j["R"] = to_string(ode.R);
  j["S"] = to_string(ode.S);
  return j;
}

ordered_json map_json(const PointMap& m) {
  ordered_json j;
  j["x_new"] = to_string(m.x_new);
  j["y_new"] = to_string(m.y_new);
  j["branch"] = m.branch;
  if (m.verification) {
    j["max_residual"] = m.verification->max_residual;
    j["verified"] = m.verification->passed;
    j["samples"] = m.verification->samples;
  } else {
    j["max_residual"] = nullptr;
  }
  if (m.J) j["J"] = to_string(*m.J);
  return j;
}

std::string emit_json(const Report& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["class"] = r.kind ? ordered_json(to_string(*r.kind)) : ordered_json(nullptr);
  j["coefficients"] = coefficients_json(r.ode);
  ordered_json conds = ordered_json::array();
  for (const auto& c : r.conditions) {
    conds.push_back({{"label", c.label}, {"paper_ref", c.paper_ref},
                     {"verdict", to_string(c.outcome)}, {"detail", c.detail}});
  }
  j["conditions"] = conds;
  ordered_json inv = ordered_json::object();
  for (const auto& [name, e] : r.invariants) inv[name] = to_string(e);
  j["invariants"] = inv;
  j["J"] = r.J ? ordered_json(to_string(*r.J)) : ordered_json(nullptr);
  j["map"] = r.map ? map_json(*r.map) : ordered_json(nullptr);
  if (!r.candidates.empty()) {
    ordered_json cands = ordered_json::array();
    for (const auto& m : r.candidates) cands.push_back(map_json(m));
    j["candidates"] = cands;
  }
  if (r.pulled_back) {
    j["pullback"] = coefficients_json(*r.pulled_back);
    j["pullback"]["rhs"] = to_string(assemble_rhs(*r.pulled_back));
  }
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string emit_text(const Report& r) {
  std::ostringstream out;
  if (r.kind) out << "class: " << to_string(*r.kind) << "\n";
  out << "equation: y'' = P + 3*Q*y' + 3*R*y'^2 + S*y'^3\n";
  out << "  P = " << r.ode.P << "\n  Q = " << r.ode.Q << "\n  R = " << r.ode.R
      << "\n  S = " << r.ode.S << "\n";
  std::string theorem;
  for (const auto& c : r.conditions) {
    if (c.paper_ref != theorem) {
      theorem = c.paper_ref;
      out << theorem << ":\n";
    }
    out << "  [" << to_string(c.outcome) << "] " << c.label;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  if (!r.invariants.empty()) {
    out << "invariants:\n";
    for (const auto& [name, e] : r.invariants) out << "  " << name << " = " << e << "\n";
  }
  if (r.map && r.map->J) {
    out << "J = " << *r.map->J << "\n";
  } else if (r.J) {
    out << "J = ±(" << *r.J << ")\n";
  }
  if (r.map) {
    out << "map (branch " << r.map->branch << "):\n";
    out << "  x~ = " << r.map->x_new << "\n  y~ = " << r.map->y_new << "\n";
    if (r.map->verification) {
      const Verification& v = *r.map->verification;
      out << "  " << (v.passed ? "verified" : "NOT verified") << ": max residual "
          << residual_text(v.max_residual) << " over " << v.samples << " samples";
      if (v.skipped) out << " (" << v.skipped << " skipped)";
      out << "\n";
    }
    for (const auto& c : r.candidates) {
      if (c.branch == r.map->branch || !c.verification) continue;
      out << "  rejected branch " << c.branch << ": max residual "
          << residual_text(c.verification->max_residual) << "\n";
    }
  } else if (r.kind && *r.kind != ClassKind::NotEquivalent &&
             *r.kind != ClassKind::Indeterminate && r.subcommand == "map") {
    out << "map: none\n";
  }
  if (r.pulled_back) {
    out << "pullback: y'' = " << assemble_rhs(*r.pulled_back) << "\n";
    out << "  P = " << r.pulled_back->P << "\n  Q = " << r.pulled_back->Q
        << "\n  R = " << r.pulled_back->R << "\n  S = " << r.pulled_back->S << "\n";
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace

Report report_from(const Classification& c, const OdeCubic& ode) {
  Report r;
  r.ode = ode;
  r.kind = c.kind;
  for (const CheckResult* check : {&c.p1, &c.p2, &c.p3}) {
    for (const auto& cond : check->conditions) r.conditions.push_back(cond);
  }
  if (c.kind == ClassKind::PainleveI || c.kind == ClassKind::PainleveII ||
      c.kind == ClassKind::PainleveIIIZeroParams) {
    for (const auto& [name, f] : c.passing().invariants) r.invariants.emplace_back(name, to_expr(f));
  }
  if (c.kind == ClassKind::PainleveII && c.J) r.J = c.J->value;
  r.warnings = c.warnings;
  return r;
}

void attach_map(Report& r, const MapResult& m) {
  r.map = m.chosen;
  r.candidates = m.candidates;
  for (const auto& w : m.warnings) r.warnings.push_back(w);
}

std::string emit_report(const Report& r, ReportMode mode) {
  return mode == ReportMode::Json ? emit_json(r) : emit_text(r);
}

}  // namespace painleve
