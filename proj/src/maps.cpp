#include "fraciter/maps.hpp"

#include "fraciter/constants.hpp"
#include "fraciter/errors.hpp"

namespace fraciter {

namespace {

// Bisection for a strictly monotone residual with a sign change on [lo, hi].
Real bisect(const std::function<Real(const Real&)>& f, Real lo, Real hi,
            long max_iter, const char* what) {
    Real f_lo = f(lo);
    Real f_hi = f(hi);
    if (f_lo.is_zero()) return lo;
    if (f_hi.is_zero()) return hi;
    if (f_lo.sign() == f_hi.sign())
        throw NonConvergenceError(std::string(what) + ": no sign change on the bracket");
    const mpfr_prec_t bits = lo.bits();
    Real width_tol(bits);
    mpfr_set_ui_2exp(width_tol.raw(), 1, -static_cast<mpfr_exp_t>(bits - 4), MPFR_RNDN);
    width_tol *= max(abs(lo), max(abs(hi), Real::from_long(1, bits)));
    for (long i = 0; i < max_iter; ++i) {
        Real mid = (lo + hi) / 2L;
        if (hi - lo <= width_tol) return mid;
        Real fm = f(mid);
        if (fm.is_zero()) return mid;
        if (fm.sign() == f_lo.sign()) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    throw NonConvergenceError(std::string(what) + ": bisection did not converge");
}

Real require_lambda(const MapParams& p, mpfr_prec_t bits, bool below_one) {
    if (!p.lambda) throw DomainError("logistic entry needs a lambda parameter");
    Real lam = p.lambda->to_real(bits);
    if (below_one) {
        if (!(lam > 0L) || !(lam < 1L))
            throw DomainError("logistic_fp0 needs 0 < lambda < 1");
    } else {
        if (!(lam > 1L) || !(lam < 2L))
            throw DomainError("logistic_fpmu needs 1 < lambda < 2");
    }
    return lam;
}

Real exp_base_value(const MapParams& p, mpfr_prec_t bits) {
    if (p.base_sqrt2) return sqrt(Real::from_long(2, bits));
    if (!p.base) throw DomainError("exp_base entry needs a base parameter");
    return p.base->to_real(bits);
}

}  // namespace

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Interval MapSpec::shifted_basin() const {
    Interval s;
    if (shift == Shift::XMinusP) {
        s.lo = basin.lo - fixed_point;
        s.hi = basin.hi - fixed_point;
        s.lo_closed = basin.lo_closed;
        s.hi_closed = basin.hi_closed;
    } else {
        s.lo = fixed_point - basin.hi;
        s.hi = fixed_point - basin.lo;
        s.lo_closed = basin.hi_closed;
        s.hi_closed = basin.lo_closed;
    }
    return s;
}

Real eval_conjugate(const MapSpec& spec, const Real& y) {
    if (y.is_nan()) throw DomainError(spec.name + ": NaN argument");
    // A single step is well defined on the basin's closure; only orbits
    // need the open interval.
    Interval sb = spec.shifted_basin();
    bool inside = sb.contains(y) || (!sb.lo.is_inf() && y == sb.lo) ||
                  (!sb.hi.is_inf() && y == sb.hi);
    if (!inside)
        throw DomainError(spec.name + ": point outside the shifted basin");
    return spec.conjugate(y);
}

Real lower_fixed_point_exp(const Real& c, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    Real e = exp(Real::from_long(1, bits));
    Real cap = exp(1L / e);  // e^{1/e}
    if (!(c > 1L) || !(c < cap))
        throw DomainError("exp_base requires 1 < c < e^(1/e)");
    Real log_c = ln(c);
    auto residual = [&](const Real& x) { return exp(x * log_c) - x; };
    return bisect(residual, Real::from_long(1, bits), e, ctx.max_iterations,
                  "lower_fixed_point_exp");
}

Real upper_fixed_point_exp(const Real& c, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    Real e = exp(Real::from_long(1, bits));
    Real cap = exp(1L / e);
    if (!(c > 1L) || !(c < cap))
        throw DomainError("exp_base requires 1 < c < e^(1/e)");
    Real log_c = ln(c);
    auto residual = [&](const Real& x) { return exp(x * log_c) - x; };
    Real hi = Real::from_long(4, bits);
    int doublings = 0;
    while (residual(hi).sign() <= 0) {
        hi = hi * 2L;
        if (++doublings > 64)
            throw NonConvergenceError("upper_fixed_point_exp: no upper bracket");
    }
    return bisect(residual, e, hi, ctx.max_iterations, "upper_fixed_point_exp");
}

MapSpec catalog(MapId id, const MapParams& params, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    MapSpec m;
    m.id = id;
    m.params = params;
    m.orbit_bits = bits;

    switch (id) {
        case MapId::Sqrt2ExpFp2: {
            m.name = "sqrt2exp_fp2";
            Real log2 = ln2(ctx);
            m.fixed_point = Real::from_long(2, bits);
            m.multiplier = log2;
            m.shift = MapSpec::Shift::XMinusP;
            m.basin = {Real::neg_inf(bits), Real::from_long(4, bits)};
            m.monotone_basin = m.basin;
            m.step_ = [log2](const Real& x) { return exp(x * log2 / 2L); };
            m.step_back_ = [log2](const Real& x) { return 2L * ln(x) / log2; };
            m.conj_ = [log2](const Real& y) { return 2L * expm1(y * log2 / 2L); };
            break;
        }
        case MapId::Sqrt2ExpFp4: {
            m.name = "sqrt2exp_fp4";
            Real log2 = ln2(ctx);
            m.fixed_point = Real::from_long(4, bits);
            m.multiplier = 1L / (2L * log2);  // 1/ln 4
            m.shift = MapSpec::Shift::XMinusP;
            m.via_inverse = true;
            m.basin = {Real::from_long(2, bits), Real::pos_inf(bits)};
            m.monotone_basin = m.basin;
            m.step_ = [log2](const Real& x) { return 2L * ln(x) / log2; };
            m.step_back_ = [log2](const Real& x) { return exp(x * log2 / 2L); };
            m.conj_ = [log2](const Real& z) {
                if (z <= -4L) throw DomainError("sqrt2exp_fp4: conjugate needs z > -4");
                return 2L * log1p(z / 4L) / log2;
            };
            break;
        }
        case MapId::LogisticFp0: {
            Real lam = require_lambda(params, bits, /*below_one=*/true);
            m.name = "logistic_fp0";
            m.fixed_point = Real::from_long(0, bits);
            m.multiplier = lam;
            m.shift = MapSpec::Shift::XMinusP;
            m.basin = {Real::from_long(0, bits), Real::from_long(1, bits)};
            m.monotone_basin = {Real::from_long(0, bits), Real::from_ratio(1, 2, bits), false, true};
            auto f = [lam](const Real& x) { return lam * x * (1L - x); };
            m.step_ = f;
            m.conj_ = f;
            m.step_back_ = [lam](const Real& w) {
                // lower preimage, the one in (0, 1/2]
                Real disc = 1L - 4L * w / lam;
                if (disc.sign() < 0) throw DomainError("logistic: value above the fold");
                return (1L - sqrt(disc)) / 2L;
            };
            break;
        }
        case MapId::LogisticFpMu: {
            Real lam = require_lambda(params, bits, /*below_one=*/false);
            m.name = "logistic_fpmu";
            Real mu = (lam - 1L) / lam;
            m.fixed_point = mu;
            m.multiplier = 2L - lam;
            m.shift = MapSpec::Shift::XMinusP;
            m.basin = {Real::from_long(0, bits), Real::from_long(1, bits)};
            m.monotone_basin = {Real::from_long(0, bits), Real::from_ratio(1, 2, bits), false, true};
            m.step_ = [lam](const Real& x) { return lam * x * (1L - x); };
            m.conj_ = [lam](const Real& y) { return y * ((2L - lam) - lam * y); };
            m.step_back_ = [lam](const Real& w) {
                Real disc = 1L - 4L * w / lam;
                if (disc.sign() < 0) throw DomainError("logistic: value above the fold");
                return (1L - sqrt(disc)) / 2L;
            };
            break;
        }
        case MapId::Radical: {
            m.name = "radical";
            Real phi = golden_ratio(ctx);
            m.fixed_point = phi;
            m.multiplier = 1L / (2L * phi);
            m.shift = MapSpec::Shift::PMinusX;
            m.basin = {Real::from_long(-1, bits), Real::pos_inf(bits)};
            m.monotone_basin = m.basin;
            m.step_ = [](const Real& x) { return sqrt(x + 1L); };
            m.step_back_ = [](const Real& x) {
                if (x.sign() < 0) throw DomainError("radical: no preimage below 0");
                return x * x - 1L;
            };
            // phi - sqrt(1+phi-y) without the subtractive cancellation:
            // multiply through by the conjugate (1+phi = phi^2).
            m.conj_ = [phi](const Real& y) {
                Real arg = (1L + phi) - y;
                if (arg.sign() < 0) throw DomainError("radical: conjugate needs y <= 1+phi");
                return y / (phi + sqrt(arg));
            };
            break;
        }
        case MapId::GammaFp1: {
            m.name = "gamma_fp1";
            auto ev = make_gamma_evaluator(ctx);
            m.gamma = ev;
            m.orbit_bits = ev->value_bits();
            const mpfr_prec_t ob = m.orbit_bits;
            Real eg = euler_gamma_digits(ev->relative_digits(), ctx.max_iterations);
            m.fixed_point = Real::from_long(1, ob);
            m.multiplier = 1L - eg;
            m.shift = MapSpec::Shift::XMinusP;
            // Basin floor: below it the first step overshoots the repelling
            // fixed point 2 and the orbit escapes.  Gamma(1+x) = 2 there.
            auto residual = [&](const Real& x) { return ev->f_gamma(x) - 2L; };
            Real floor_x = bisect(residual, Real::from_ratio(-99, 100, ob),
                                  Real::from_long(0, ob), ctx.max_iterations,
                                  "gamma_fp1 basin floor");
            m.basin = {floor_x, Real::from_long(2, ob)};
            m.monotone_basin = {ev->branch_argmin(), Real::from_long(2, ob)};
            m.step_ = [ev](const Real& x) { return ev->f_gamma(x); };
            m.step_back_ = [ev](const Real& w) { return ev->inverse_f_gamma(w); };
            m.conj_ = [ev](const Real& y) { return ev->f_gamma(y + 1L) - 1L; };
            break;
        }
        case MapId::GammaFp2: {
            m.name = "gamma_fp2";
            auto ev = make_gamma_evaluator(ctx);
            m.gamma = ev;
            m.orbit_bits = ev->value_bits();
            const mpfr_prec_t ob = m.orbit_bits;
            Real eg = euler_gamma_digits(ev->relative_digits(), ctx.max_iterations);
            m.fixed_point = Real::from_long(2, ob);
            Real s = 1L / (3L - 2L * eg);
            m.multiplier = s;
            m.shift = MapSpec::Shift::XMinusP;
            m.via_inverse = true;
            m.basin = {Real::from_long(1, ob), Real::pos_inf(ob)};
            m.monotone_basin = m.basin;
            m.step_ = [ev](const Real& x) { return ev->inverse_f_gamma(x); };
            m.step_back_ = [ev](const Real& x) { return ev->f_gamma(x); };
            // h(z) = g(2+z) - 2; the multiplier-scaled guess seeds the
            // root solve with the point the orbit is about to land on.
            m.conj_ = [ev, s](const Real& z) {
                Real w = z + 2L;
                Real hint = z * s + 2L;
                return ev->inverse_f_gamma(w, hint) - 2L;
            };
            break;
        }
        case MapId::ExpBase: {
            m.name = "exp_base";
            Real c = exp_base_value(params, bits);
            Real p = lower_fixed_point_exp(c, ctx);
            Real p2 = upper_fixed_point_exp(c, ctx);
            Real log_c = ln(c);
            m.fixed_point = p;
            m.multiplier = p * log_c;
            m.shift = MapSpec::Shift::XMinusP;
            m.basin = {Real::neg_inf(bits), p2};
            m.monotone_basin = m.basin;
            m.step_ = [log_c](const Real& x) { return exp(x * log_c); };
            m.step_back_ = [log_c](const Real& x) { return ln(x) / log_c; };
            m.conj_ = [p, log_c](const Real& y) { return p * expm1(y * log_c); };
            break;
        }
        default:
            throw DomainError("catalog: unknown map id");
    }

    if (!(m.multiplier > 0L) || !(m.multiplier < 1L))
        throw DomainError(m.name + ": multiplier outside (0,1)");
    return m;
}

}  // namespace fraciter
