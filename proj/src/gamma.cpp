#include "fraciter/gamma.hpp"

#include <cmath>

#include "fraciter/errors.hpp"
#include "fraciter/rootfind.hpp"

namespace fraciter {

namespace {

const double kLog10TwoPi = 0.7981798683581150;

// Smallest order whose proven relative error bound undercuts 10^-digits.
int spouge_order(int digits) {
    double a = (digits + 2) / kLog10TwoPi;
    for (int i = 0; i < 4; ++i)
        a = (digits + 2 + 0.5 * std::log10(a)) / kLog10TwoPi;
    return static_cast<int>(std::ceil(a)) + 1;
}

// Decimal digits lost to cancellation in the alternating coefficient sum:
// the largest |c_k| relative to the O(1) total.
int cancellation_digits(int a) {
    double worst = 0.0;
    for (int k = 1; k < a; ++k) {
        double t = static_cast<double>(a - k);
        double lg = t + (k - 0.5) * std::log(t) - std::lgamma(static_cast<double>(k));
        if (lg > worst) worst = lg;
    }
    return static_cast<int>(worst / std::log(10.0)) + 6;
}

}  // namespace

GammaEvaluator::GammaEvaluator(const PrecisionContext& ctx)
    : ctx_(ctx),
      rel_digits_(2 * ctx.working_digits() + 20),
      order_(spouge_order(rel_digits_ + 3)),
      sum_bits_(PrecisionContext::bits_for_digits(rel_digits_ + 3 + cancellation_digits(order_))),
      lead_bits_(PrecisionContext::bits_for_digits(rel_digits_ + 8) + 16),
      out_bits_(PrecisionContext::bits_for_digits(rel_digits_) + 8),
      sqrt_two_pi_(sum_bits_),
      argmin_(out_bits_),
      minval_(out_bits_) {
    mpfr_const_pi(sqrt_two_pi_.raw(), MPFR_RNDN);
    mpfr_mul_ui(sqrt_two_pi_.raw(), sqrt_two_pi_.raw(), 2, MPFR_RNDN);
    mpfr_sqrt(sqrt_two_pi_.raw(), sqrt_two_pi_.raw(), MPFR_RNDN);

    // c_k = (-1)^{k-1} (a-k)^{k-1/2} e^{a-k} / (k-1)!
    coef_.reserve(order_ - 1);
    Real factorial = Real::from_long(1, sum_bits_);  // (k-1)!
    for (int k = 1; k < order_; ++k) {
        if (k > 1) factorial *= (k - 1);
        Real t = Real::from_long(order_ - k, sum_bits_);
        Real c = exp((Real::from_long(2 * k - 1, sum_bits_) / 2L) * ln(t) + t) / factorial;
        if (k % 2 == 0) c = -c;
        coef_.push_back(c);
    }

    // Golden-section search for the minimum of Gamma(1+x) on [0.3, 0.7].
    const mpfr_prec_t gb = out_bits_;
    Real inv_phi = (sqrt(Real::from_long(5, gb)) - 1L) / 2L;
    Real lo = Real::from_ratio(3, 10, gb);
    Real hi = Real::from_ratio(7, 10, gb);
    Real x1 = hi - inv_phi * (hi - lo);
    Real x2 = lo + inv_phi * (hi - lo);
    Real f1 = f_gamma(x1);
    Real f2 = f_gamma(x2);
    // 300 steps shrink the bracket below 10^-62; the minimum value is then
    // known to twice that many digits, ample for the domain test.
    for (int i = 0; i < 300; ++i) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f_gamma(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f_gamma(x2);
        }
    }
    argmin_ = (lo + hi) / 2L;
    minval_ = f_gamma(argmin_);
}

Real GammaEvaluator::spouge_sum(const Real& z) const {
    Real zs = z.rounded_to(sum_bits_);
    Real s = sqrt_two_pi_;
    for (std::size_t k = 0; k < coef_.size(); ++k)
        s += coef_[k] / (zs + static_cast<long>(k + 1));
    return s;
}

Real GammaEvaluator::gamma(const Real& x) const {
    if (x.is_nan() || x.sign() <= 0)
        throw DomainError("gamma requires a positive argument");
    const bool shifted = x < 1L;  // Gamma(x) = Gamma(x+1)/x keeps z >= 0
    Real z = shifted ? x.rounded_to(lead_bits_) : x.rounded_to(lead_bits_) - 1L;
    Real s = spouge_sum(z);
    Real za = z + static_cast<long>(order_);
    Real lead = exp((z + Real::from_ratio(1, 2, lead_bits_)) * ln(za) - za);
    Real r = (lead.rounded_to(out_bits_)) * s.rounded_to(out_bits_);
    if (shifted) r /= x.rounded_to(out_bits_);
    return r;
}

Real GammaEvaluator::f_gamma(const Real& x) const {
    Real one_plus = x.rounded_to(lead_bits_) + 1L;
    if (one_plus.sign() <= 0) throw DomainError("f_gamma requires 1 + x > 0");
    return gamma(one_plus);
}

Real GammaEvaluator::solve_increasing(const Real& w, Real lo, Real hi,
                                      const Real& f_lo_in, const Real& f_hi_in) const {
    auto residual = [&](const Real& x) { return f_gamma(x) - w; };
    Real r_tol = max(abs(w), Real::from_long(1, out_bits_)) * pow10(-(rel_digits_ - 4), out_bits_);
    return bracketed_root(residual, std::move(lo), std::move(hi), f_lo_in - w, f_hi_in - w,
                          r_tol, rel_digits_ - 4, ctx_.max_iterations);
}

Real GammaEvaluator::inverse_f_gamma(const Real& w) const {
    if (w.is_nan()) throw DomainError("inverse_f_gamma: NaN");
    if (w < minval_) throw DomainError("inverse_f_gamma: value below the branch minimum");
    Real lo = argmin_;
    Real f_lo = minval_;
    Real hi = Real::from_long(1, out_bits_);
    Real f_hi = f_gamma(hi);
    long doublings = 0;
    while (f_hi < w) {
        lo = hi;
        f_lo = f_hi;
        hi = hi * 2L;
        f_hi = f_gamma(hi);
        if (++doublings > 64)
            throw NonConvergenceError("inverse_f_gamma: bracket search ran away");
    }
    return solve_increasing(w, lo, hi, f_lo, f_hi);
}

Real GammaEvaluator::inverse_f_gamma(const Real& w, const Real& hint) const {
    if (w.is_nan()) throw DomainError("inverse_f_gamma: NaN");
    if (w < minval_) throw DomainError("inverse_f_gamma: value below the branch minimum");
    Real a = hint.rounded_to(out_bits_);
    if (!(a > argmin_)) return inverse_f_gamma(w);
    Real fa = f_gamma(a) - w;
    if (fa.is_zero()) return a;
    // Second seed one finite-difference step along the local slope.
    Real d = max(abs(a), Real::from_long(1, out_bits_)) * pow10(-20, out_bits_);
    Real slope = (f_gamma(a + d) - (fa + w)) / d;
    Real b = slope.is_zero() ? a + d : a - fa / slope;
    if (!(b > argmin_)) return inverse_f_gamma(w);
    Real fb = f_gamma(b) - w;

    Real x_tol = max(abs(a), Real::from_long(1, out_bits_)) * pow10(-(rel_digits_ - 4), out_bits_);
    Real r_tol = max(abs(w), Real::from_long(1, out_bits_)) * pow10(-(rel_digits_ - 4), out_bits_);
    for (int i = 0; i < 80; ++i) {
        if (abs(fb) <= r_tol || abs(b - a) <= x_tol) return b;
        Real denom = fb - fa;
        if (denom.is_zero()) break;
        Real next = b - fb * (b - a) / denom;
        if (!(next > argmin_)) break;
        a = b;
        fa = fb;
        b = next;
        fb = f_gamma(b) - w;
    }
    return inverse_f_gamma(w);  // guess went nowhere; bracketed solve
}

std::shared_ptr<const GammaEvaluator> make_gamma_evaluator(const PrecisionContext& ctx) {
    return std::make_shared<const GammaEvaluator>(ctx);
}

}  // namespace fraciter
