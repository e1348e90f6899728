#include "fraciter/frac.hpp"

#include "fraciter/errors.hpp"
#include "fraciter/rootfind.hpp"

namespace fraciter {

Real frac_iterate(const FracQuery& q) {
    const AbelBranch& br = q.branch;
    if (!br.eval_domain().contains(q.x0))
        throw DomainError(br.id_string() + ": start point outside the branch");
    Real base = br.eval(q.x0);
    return br.invert(base + q.t);
}

Real frac_iterate(const AbelBranch& branch, const Real& x0, const Real& t) {
    return frac_iterate(FracQuery{branch, x0, t});
}

Real frac_iterate_reported(const AbelBranch& branch, const Real& x0, const Real& t) {
    Real v = frac_iterate(branch, x0, t);
    return branch.reports_fold_mirror() ? branch.fold_mirror(v) : v;
}

Real tetration(const MapParams& base, const Real& t, const PrecisionContext& ctx) {
    if (t.is_nan()) throw DomainError("tetration: NaN height");
    if (!(t > -2L))
        throw RangeError("tetration: heights t <= -2 lie below the tower's range");
    AbelBranch branch = AbelBranch::build(BranchId::ExpBaseI1, base, ctx);
    return branch.invert(t.rounded_to(ctx.working_bits()));
}

std::vector<Real> abel_fixed_points(const AbelBranch& branch, const Real& lo, const Real& hi) {
    const PrecisionContext& ctx = branch.context();
    const mpfr_prec_t bits = ctx.working_bits();
    if (!(lo < hi)) throw DomainError("abel_fixed_points: empty search interval");

    auto residual = [&](const Real& x) { return branch.eval(x) - x; };

    std::vector<Real> roots;
    // Scan on the exact hundredths grid.
    long k_lo = (lo * 100L).to_long();
    while (Real::from_ratio(k_lo, 100, bits) < lo) ++k_lo;
    long k_hi = (hi * 100L).to_long();
    while (Real::from_ratio(k_hi, 100, bits) > hi) --k_hi;

    bool have_prev = false;
    Real x_prev(bits), r_prev(bits);
    for (long k = k_lo; k <= k_hi; ++k) {
        Real x = Real::from_ratio(k, 100, bits);
        Real r(bits);
        try {
            r = residual(x);
        } catch (const Error&) {
            have_prev = false;  // hole in the domain; restart the scan
            continue;
        }
        if (r.is_zero()) {
            roots.push_back(x);
            have_prev = false;
            continue;
        }
        if (have_prev && r.sign() != r_prev.sign()) {
            Real tol = pow10(-(ctx.stop_digits() - 2), bits);
            roots.push_back(bracketed_root(residual, x_prev, x, r_prev, r, tol,
                                           ctx.working_digits() - 2, ctx.max_iterations));
        }
        x_prev = x;
        r_prev = r;
        have_prev = true;
    }
    return roots;
}

}  // namespace fraciter
