#pragma once

#include "painleve/expr.hpp"
#include "painleve/ratfunc.hpp"

namespace painleve {

/// An expression r with r^q = f. Exact q-th powers are pulled out of the
/// constant, monomial and polynomial parts of numerator and denominator;
/// whatever remains stays under a single radical. When the ring has
/// trigonometric pairs both normal forms (sin-reduced and cos-reduced) are
/// tried. For even q the extracted part is the one with positive leading
/// coefficient, so r may differ from the principal root by a sign.
Expr extract_root(const RatFunc& f, unsigned q);

/// Rational-function q-th root when one exists exactly.
std::optional<RatFunc> exact_root(const RatFunc& f, unsigned q);

}  // namespace painleve
