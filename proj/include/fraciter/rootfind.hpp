#pragma once

#include <functional>

#include "fraciter/precision.hpp"
#include "fraciter/real.hpp"

namespace fraciter {

// Root of a monotone residual on a bracket with a sign change: bisection
// down to about ten significant digits, then secant steps kept inside the
// live bracket.  `tol_residual` ends the refinement; `budget` caps the
// total number of residual evaluations.
Real bracketed_root(const std::function<Real(const Real&)>& residual,
                    Real a, Real b, Real ra, Real rb,
                    const Real& tol_residual, int result_digits, long budget);

}  // namespace fraciter
