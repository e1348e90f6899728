#pragma once

#include <utility>

#include "fraciter/maps.hpp"
#include "fraciter/precision.hpp"
#include "fraciter/real.hpp"

namespace fraciter {

// Result of one limit evaluation.
struct KoenigReport {
    Real value;
    long iterations = 0;
    Real multiplier;
};

// Evaluates the linearising (Schroeder) function of a catalog map by plain
// iteration: Phi(y) = lim_k y_k / s^k where y_k is the conjugate orbit and
// s the multiplier.  The limit is accepted once three successive estimates
// agree to target + guard/2 digits; each later estimate is the previous one
// advanced through the functional equation, so the agreement doubles as a
// residual check.
class SchroederSolution {
public:
    SchroederSolution(MapSpec spec, const PrecisionContext& ctx)
        : spec_(std::move(spec)), ctx_(ctx) {}

    KoenigReport schroeder_value(const Real& y0) const;
    Real value(const Real& y0) const { return schroeder_value(y0).value; }

    const MapSpec& map() const { return spec_; }
    const PrecisionContext& context() const { return ctx_; }

private:
    MapSpec spec_;
    PrecisionContext ctx_;
};

// Convergence data for a raw orbit: x_k - fixed_point ~ constant * s^k.
// Returns (multiplier, constant), the constant in raw-coordinate sign.
std::pair<Real, Real> convergence_rate(const MapSpec& spec, const Real& raw_x0,
                                       const PrecisionContext& ctx);

}  // namespace fraciter
