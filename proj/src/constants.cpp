#include "fraciter/constants.hpp"

#include <cmath>

#include "fraciter/errors.hpp"

namespace fraciter {

Real ln2(const PrecisionContext& ctx) {
    Real r(ctx.working_bits());
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

Real golden_ratio(const PrecisionContext& ctx) {
    Real five = Real::from_long(5, ctx.working_bits());
    return (sqrt(five) + 1L) / 2L;
}

Real pi(const PrecisionContext& ctx) {
    Real r(ctx.working_bits());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real sqrt_pi(const PrecisionContext& ctx) { return sqrt(pi(ctx)); }

Real euler_gamma_digits(int digits, long max_iterations) {
    // gamma = A(n)/B(n) - ln n with
    //   A(n) = sum_k (n^k/k!)^2 H_k,   B(n) = sum_k (n^k/k!)^2,
    // truncation error O(e^{-4n}); n sized for `digits` plus margin.
    const int internal = digits + 10;
    const mpfr_prec_t bits = PrecisionContext::bits_for_digits(internal);
    const long n = static_cast<long>(std::ceil((internal + 7) * 0.5756462732485115)) + 1;

    Real nn = Real::from_long(n, bits);
    Real term = Real::from_long(1, bits);     // (n^k/k!)^2
    Real harmonic = Real::from_long(0, bits);  // H_k
    Real a_sum = Real::from_long(0, bits);
    Real b_sum = Real::from_long(1, bits);
    Real cutoff(bits);
    mpfr_set_ui_2exp(cutoff.raw(), 1, -static_cast<mpfr_exp_t>(bits + 8), MPFR_RNDN);

    bool converged = false;
    for (long k = 1; k <= max_iterations; ++k) {
        Real ratio = nn / k;
        term *= ratio;
        term *= ratio;
        harmonic += Real::from_ratio(1, k, bits);
        a_sum += term * harmonic;
        b_sum += term;
        if (k > n && term < cutoff * b_sum) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NonConvergenceError("euler_gamma: series budget exhausted");
    return (a_sum / b_sum - ln(nn)).rounded_to(PrecisionContext::bits_for_digits(digits));
}

Real euler_gamma(const PrecisionContext& ctx) {
    return euler_gamma_digits(ctx.working_digits(), ctx.max_iterations);
}

Real elementary(const PrecisionContext& ctx, Elementary kind, const std::vector<Real>& args) {
    auto arg = [&](std::size_t i) -> Real {
        if (i >= args.size()) throw DomainError("elementary: missing argument");
        return args[i].rounded_to(ctx.working_bits());
    };
    switch (kind) {
        case Elementary::Exp:  return exp(arg(0));
        case Elementary::Ln:   return ln(arg(0));
        case Elementary::Sqrt: return sqrt(arg(0));
        case Elementary::Pow:  return pow(arg(0), arg(1));
    }
    throw DomainError("elementary: unknown operation");
}

}  // namespace fraciter
