#pragma once

#include <memory>
#include <vector>

#include "fraciter/precision.hpp"
#include "fraciter/real.hpp"

namespace fraciter {

// Gamma on the positive real axis via a Spouge-class approximation
//
//   Gamma(z+1) = (z+a)^{z+1/2} e^{-(z+a)} (c0 + sum_{k<a} c_k/(z+k) + eps)
//
// with |eps| <= a^{-1/2} (2 pi)^{-(a+1/2)} relative for z >= 0.  The order a
// is chosen from the context so the proven bound undercuts the requested
// relative precision; the alternating sum is carried with enough extra
// digits to absorb its internal cancellation.
//
// The evaluator works at roughly twice the context's working precision.
// That is what the conjugated fixed-point iterations need: near a fixed
// point the step reduces to Gamma(2+y) - 1 with |y| as small as
// 10^-working, so Gamma itself must be accurate well below that.
class GammaEvaluator {
public:
    explicit GammaEvaluator(const PrecisionContext& ctx);

    // Gamma(x) for x > 0.
    Real gamma(const Real& x) const;

    // f(x) = Gamma(1+x) for 1+x > 0.
    Real f_gamma(const Real& x) const;

    // Inverse of f on its increasing branch (x above the argmin near
    // 0.4616).  Throws DomainError for w below the branch minimum,
    // NonConvergenceError if bracketing or refinement stalls.
    Real inverse_f_gamma(const Real& w) const;
    // Same, seeded with an initial guess; falls back to the bracketed
    // solve if the guess goes nowhere.
    Real inverse_f_gamma(const Real& w, const Real& hint) const;

    // Location and value of the minimum of Gamma(1+x) on [0.3, 0.7].
    const Real& branch_argmin() const { return argmin_; }
    const Real& branch_min() const { return minval_; }

    int approximation_order() const { return order_; }
    // Decimal digits of guaranteed relative accuracy.
    int relative_digits() const { return rel_digits_; }
    // Precision carried by returned values.
    mpfr_prec_t value_bits() const { return out_bits_; }

    const PrecisionContext& context() const { return ctx_; }

private:
    Real spouge_sum(const Real& z) const;
    Real solve_increasing(const Real& w, Real lo, Real hi, const Real& f_lo, const Real& f_hi) const;

    PrecisionContext ctx_;
    int rel_digits_;
    int order_;
    mpfr_prec_t sum_bits_;   // alternating-sum precision (covers cancellation)
    mpfr_prec_t lead_bits_;  // precision for the (z+a)^{z+1/2} e^{-(z+a)} factor
    mpfr_prec_t out_bits_;
    Real sqrt_two_pi_;
    std::vector<Real> coef_;  // c_1 .. c_{a-1}, signs included
    Real argmin_;
    Real minval_;
};

// Shared evaluator for a context; construction is deterministic, so
// callers may freely build their own instead.
std::shared_ptr<const GammaEvaluator> make_gamma_evaluator(const PrecisionContext& ctx);

}  // namespace fraciter
