#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "painleve/classify.hpp"
#include "painleve/parse.hpp"
#include "painleve/zero_test.hpp"

namespace painleve {

/// The canonical equation a map should land on.
struct Target {
  enum class Kind { PainleveI, PainleveII };
  Kind kind = Kind::PainleveI;
  /// Parameter of y'' = 2y^3 + xy + J; unused for PainleveI.
  Expr J;

  static Target painleve1() { return {Kind::PainleveI, Expr(0)}; }
  static Target painleve2(const Expr& j) { return {Kind::PainleveII, j}; }
  /// The target written as an equation in its own x, y.
  OdeCubic ode() const;
};

struct VerifyOptions {
  int samples = 20;
  std::uint64_t seed = kDefaultSeed;
  unsigned digits = 50;
  double tolerance = 1e-9;
};

struct Verification {
  bool passed = false;
  double max_residual = 0;
  int samples = 0;
  /// Sample points skipped because of a pole or a negative radicand.
  int skipped = 0;
  std::string note;
};

struct PointMap {
  Expr x_new;
  Expr y_new;
  /// Sign choices taken, e.g. "y+" or "J+".
  std::string branch;
  /// Target parameter for Painleve II maps.
  std::optional<Expr> J;
  std::optional<Verification> verification;
};

struct MapResult {
  PointMap chosen;
  /// Every materialized sign branch with its verification.
  std::vector<PointMap> candidates;
  std::vector<std::string> warnings;
};

/// x_x y_y - x_y y_x, normalized.
Expr jacobian(const Expr& x_new, const Expr& y_new);

/// Pushes (y', y'') of the source equation forward through the map at seeded
/// sample points (x, y in [1,2], p in [-1,1], parameters in [1,2]) and
/// measures the target residual relative to its largest term. Throws
/// AllSamplesSingular when no sample point is usable.
Verification verify_map(const OdeCubic& source, const Target& target, const PointMap& map,
                        const VerifyOptions& opts = {});

/// Change of variables to Painleve I from the invariants I1, I2 of a passed
/// Theorem 1 check: x~ = (12 I1)^(-1/5), y~ = ±(I2/(12 (12 I1)^(1/5)))^(1/2).
/// Both signs are verified; "+" wins ties. Throws DegenerateMap for a
/// non-invertible map and BranchVerificationFailed when no sign verifies.
MapResult map_painleve1(const OdeCubic& source, const CheckResult& p1,
                        const VerifyOptions& opts = {});

/// Change of variables to Painleve II: with s = (2500 I9)^(1/6),
/// y~ = 1/s and x~ = 5 I6/s^2 - (3/2) J s. `as_printed` uses 5 I6/s for the
/// first term instead, which does not verify. Both signs of J are verified; "+" wins ties.
MapResult map_painleve2(const OdeCubic& source, const CheckResult& p2, const JValue& J,
                        const VerifyOptions& opts = {}, bool as_printed = false);

/// The equation in (x, y) whose solutions the map sends to solutions of
/// `target` (written in the target's own x, y).
OdeCubic pullback_ode(const OdeCubic& target, const Expr& x_new, const Expr& y_new);

}  // namespace painleve
