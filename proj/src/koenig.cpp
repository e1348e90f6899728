#include "fraciter/koenig.hpp"

#include "fraciter/errors.hpp"

namespace fraciter {

KoenigReport SchroederSolution::schroeder_value(const Real& y0) const {
    if (y0.is_nan()) throw DomainError(spec_.name + ": NaN start value");
    if (!spec_.shifted_basin().contains(y0))
        throw DomainError(spec_.name + ": start value outside the basin");

    const mpfr_prec_t bits = spec_.orbit_bits;
    if (y0.is_zero())
        return {Real::from_long(0, bits), 0, spec_.multiplier};

    const Real tol = pow10(-ctx_.stop_digits(), bits);
    const Real one = Real::from_long(1, bits);
    Real y = y0.rounded_to(bits);
    Real s_pow = one;
    Real est(bits), prev(bits), prev2(bits);

    for (long k = 1; k <= ctx_.max_iterations; ++k) {
        y = spec_.conjugate(y);
        s_pow *= spec_.multiplier;
        est = y / s_pow;
        if (k >= 3) {
            Real bound = tol * max(one, abs(est));
            if (abs(est - prev) <= bound && abs(est - prev2) <= 2L * bound)
                return {est, k, spec_.multiplier};
        }
        prev2 = prev;
        prev = est;
    }
    throw NonConvergenceError(spec_.name + ": limit not settled within max_iterations");
}

std::pair<Real, Real> convergence_rate(const MapSpec& spec, const Real& raw_x0,
                                       const PrecisionContext& ctx) {
    if (!spec.basin.contains(raw_x0))
        throw DomainError(spec.name + ": start value outside the basin");
    SchroederSolution sol(spec, ctx);
    KoenigReport rep = sol.schroeder_value(spec.to_conjugate(raw_x0));
    // x_k - p equals y_k or -y_k depending on the shift convention.
    Real constant = spec.shift == MapSpec::Shift::XMinusP ? rep.value : -rep.value;
    return {rep.multiplier, constant};
}

}  // namespace fraciter
