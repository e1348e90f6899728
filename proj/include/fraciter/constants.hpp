#pragma once

#include <vector>

#include "fraciter/precision.hpp"
#include "fraciter/real.hpp"

namespace fraciter {

// Fundamental constants at the context's working precision.  All of these
// are computed on demand; none are embedded as decimal literals.

Real ln2(const PrecisionContext& ctx);
Real golden_ratio(const PrecisionContext& ctx);  // (1 + sqrt 5)/2
Real pi(const PrecisionContext& ctx);
Real sqrt_pi(const PrecisionContext& ctx);

// Euler's constant via the Bessel-function ratio method (two I_0-style
// series at argument 2n, error O(e^{-4n})).  Throws NonConvergenceError if
// the series needs more than ctx.max_iterations terms.
Real euler_gamma(const PrecisionContext& ctx);

// Same algorithm at an explicit decimal precision; the context only
// supplies the iteration cap.
Real euler_gamma_digits(int digits, long max_iterations);

enum class Elementary { Exp, Ln, Sqrt, Pow };

// Uniform entry point for the four elementary operations, mostly so that
// callers holding a context can stay precision-agnostic.
Real elementary(const PrecisionContext& ctx, Elementary kind, const std::vector<Real>& args);

}  // namespace fraciter
