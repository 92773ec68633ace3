#pragma once

#include <cstdint>
#include <string>

#include "painleve/expr.hpp"
#include "painleve/ratfunc.hpp"

namespace painleve {

enum class Verdict { Zero, NonZero, Unknown };

struct ZeroVerdict {
  Verdict verdict = Verdict::Unknown;
  /// Which strategy decided.
  std::string note;

  bool zero() const { return verdict == Verdict::Zero; }
  bool nonzero() const { return verdict == Verdict::NonZero; }
  bool unknown() const { return verdict == Verdict::Unknown; }
};

std::string to_string(Verdict v);

inline constexpr std::uint64_t kDefaultSeed = 20140611;

struct ZeroTestOptions {
  int samples = 12;
  unsigned digits = 60;
  std::uint64_t seed = kDefaultSeed;
};

/// Zero when the canonical quotient is 0. A nonzero quotient over a ring
/// without transcendental or radical atoms is NonZero outright. Otherwise the
/// numerator is sampled at random points of [1,2]^n: NonZero when some sample
/// clears 10^-30 of its scale, Unknown when none does.
ZeroVerdict is_identically_zero(const Expr& e, const ZeroTestOptions& opts = {});
ZeroVerdict is_identically_zero(const RatFunc& f, const ZeroTestOptions& opts = {});

/// A random rational in [lo, hi] with denominator at most max_den.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed);
  Rational draw(const Rational& lo, const Rational& hi, long max_den = 10000);

 private:
  std::uint64_t state_;
  std::uint64_t next();
};

}  // namespace painleve
