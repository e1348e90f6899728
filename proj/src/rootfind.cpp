#include "fraciter/rootfind.hpp"

#include "fraciter/errors.hpp"

namespace fraciter {

namespace {

// Arithmetic midpoint, except on very wide positive brackets where the
// doubly-exponential inverses live; there the geometric mean halves the
// bracket's logarithmic width instead.
Real midpoint(const Real& a, const Real& b) {
    if (a > 0L && b > 16L * a) return sqrt(a * b);
    return (a + b) / 2L;
}

}  // namespace

Real bracketed_root(const std::function<Real(const Real&)>& residual,
                    Real a, Real b, Real ra, Real rb,
                    const Real& tol_residual, int result_digits, long budget) {
    if (ra.is_zero()) return a;
    if (rb.is_zero()) return b;
    if (ra.sign() == rb.sign())
        throw NonConvergenceError("bracketed_root: no sign change on the bracket");
    if (a > b) {
        Real t = a; a = b; b = t;
        t = ra; ra = rb; rb = t;
    }

    const mpfr_prec_t bits = max(a, b).bits();
    const Real one = Real::from_long(1, bits);
    Real coarse_rel = pow10(-10, bits);
    Real tol_x_rel = pow10(-result_digits, bits);

    while (b - a > max(one, min(abs(a), abs(b))) * coarse_rel && budget-- > 0) {
        Real mid = midpoint(a, b);
        if (!(mid > a) || !(mid < b)) break;  // bracket exhausted the precision
        Real rm = residual(mid);
        if (rm.is_zero()) return mid;
        if (rm.sign() == ra.sign()) {
            a = mid;
            ra = rm;
        } else {
            b = mid;
            rb = rm;
        }
    }

    // Secant on the two freshest points; any step leaving [a, b] becomes a
    // midpoint step instead.
    Real x0 = a, r0 = ra, x1 = b, r1 = rb;
    while (budget-- > 0) {
        if (abs(r1) <= tol_residual || abs(b - a) <= max(one, abs(x1)) * tol_x_rel) return x1;
        Real denom = r1 - r0;
        Real next = denom.is_zero() ? midpoint(a, b) : x1 - r1 * (x1 - x0) / denom;
        if (next.is_nan() || !(next > a) || !(next < b)) next = midpoint(a, b);
        Real rn = residual(next);
        if (rn.is_zero()) return next;
        if (rn.sign() == ra.sign()) {
            a = next;
            ra = rn;
        } else {
            b = next;
            rb = rn;
        }
        x0 = x1;
        r0 = r1;
        x1 = next;
        r1 = rn;
    }
    throw NonConvergenceError("bracketed_root: refinement did not converge");
}

}  // namespace fraciter
