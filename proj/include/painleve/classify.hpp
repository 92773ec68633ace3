#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "painleve/invariants.hpp"

namespace painleve {

enum class Outcome { Holds, Fails, Unknown };

std::string to_string(Outcome o);

struct Condition {
  /// e.g. "Theorem 2 condition 3: M ≢ 0"
  std::string label;
  /// e.g. "Theorem 2"
  std::string paper_ref;
  Outcome outcome = Outcome::Unknown;
  /// Decision note, and the failure reading ("M ≡ 0") when it fails.
  std::string detail;
};

enum class CheckVerdict { Pass, Fail, Indeterminate };

std::string to_string(CheckVerdict v);

/// Outcome of one theorem's condition list. Conditions are evaluated in
/// order and evaluation stops at the first failure; every evaluated
/// condition is listed.
struct CheckResult {
  std::string theorem;
  CheckVerdict verdict = CheckVerdict::Indeterminate;
  std::vector<Condition> conditions;
  /// Weight-0 invariants attached on success, in order of computation.
  std::vector<std::pair<std::string, RatFunc>> invariants;
  std::vector<std::string> warnings;

  const RatFunc* invariant(const std::string& name) const;
  /// First failed condition, if any.
  const Condition* failure() const;
};

/// The Painleve II parameter recovered from J^2 = ((4 + 10 I6 - 60 I3)/50)^2 / I9.
struct JValue {
  RatFunc squared;
  /// One square root of `squared`; the other is its negative.
  Expr value;
  /// False when J^2 could only be confirmed constant numerically.
  bool exact = true;
};

CheckResult check_painleve1(Pipeline& pl);
CheckResult check_painleve2(Pipeline& pl, std::optional<JValue>* j = nullptr);
CheckResult check_painleve3zero(Pipeline& pl);

enum class ClassKind { PainleveI, PainleveII, PainleveIIIZeroParams, NotEquivalent, Indeterminate };

std::string to_string(ClassKind k);

struct Classification {
  ClassKind kind = ClassKind::Indeterminate;
  CheckResult p1;
  CheckResult p2;
  CheckResult p3;
  std::optional<JValue> J;
  /// Failed conditions of every check (NotEquivalent) or the unknown ones
  /// (Indeterminate).
  std::vector<Condition> reasons;
  std::vector<std::string> warnings;

  const CheckResult& passing() const;
};

Classification classify(Pipeline& pl);
Classification classify(const OdeCubic& ode, const ZeroTestOptions& zero = {});

/// Named expressions of every pseudo-object the pipeline can compute for
/// this equation (stages that throw are skipped).
std::vector<std::pair<std::string, Expr>> pipeline_values(Pipeline& pl);

}  // namespace painleve
