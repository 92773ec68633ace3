#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "painleve/classify.hpp"
#include "painleve/transform.hpp"

namespace painleve {

enum class ReportMode { Text, Json };

/// Everything a CLI run produces. Sections that do not apply stay empty and
/// are emitted as null (JSON) or omitted (text).
struct Report {
  std::string subcommand;
  OdeCubic ode;
  std::optional<ClassKind> kind;
  std::vector<Condition> conditions;
  std::vector<std::pair<std::string, Expr>> invariants;
  std::optional<Expr> J;
  std::optional<PointMap> map;
  std::vector<PointMap> candidates;
  /// Output equation of the pullback subcommand.
  std::optional<OdeCubic> pulled_back;
  std::vector<std::string> warnings;
};

/// Conditions, invariants, J and warnings of a classification.
Report report_from(const Classification& c, const OdeCubic& ode);

/// Adds the chosen map and all candidates.
void attach_map(Report& r, const MapResult& m);

std::string emit_report(const Report& r, ReportMode mode);

}  // namespace painleve
