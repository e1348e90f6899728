#pragma once

#include <vector>

#include "fraciter/abel.hpp"

namespace fraciter {

// Fractional-iteration query: f^[t](x0) on a branch, any real t.
struct FracQuery {
    const AbelBranch& branch;
    Real x0;
    Real t;
};

// F^{-1}(F(x0) + t).  For integer t this agrees with plain iteration of
// the family map; the result always comes from the Abel machinery.
Real frac_iterate(const FracQuery& q);
Real frac_iterate(const AbelBranch& branch, const Real& x0, const Real& t);

// Same query, but reported with the family's customary root selection:
// for the supercritical logistic branch the half-iterate equation has two
// roots symmetric about the fold and the one right of the fold is the one
// usually quoted.  Other branches are unaffected.
Real frac_iterate_reported(const AbelBranch& branch, const Real& x0, const Real& t);

// Height-t tower of base c: T(c, 0) = 1, T(c, n) = c^{T(c, n-1)},
// interpolated through the Abel function of x -> c^x for real t > -2.
// Bases need a real fixed point: 1 < c < e^{1/e}.
Real tetration(const MapParams& base, const Real& t, const PrecisionContext& ctx);

// All solutions of F(x) = x inside [lo, hi]: scan with step 1/100 for sign
// changes, then refine each.  Points where F is undefined are skipped.
std::vector<Real> abel_fixed_points(const AbelBranch& branch, const Real& lo, const Real& hi);

}  // namespace fraciter
