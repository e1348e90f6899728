#include "fraciter/abel.hpp"

#include "fraciter/constants.hpp"
#include "fraciter/errors.hpp"
#include "fraciter/rootfind.hpp"

namespace fraciter {

namespace {

struct BranchIdName {
    BranchId id;
    const char* name;
};

const BranchIdName kBranchNames[] = {
    {BranchId::Sqrt2ExpI1, "sqrt2exp.I1"},
    {BranchId::Sqrt2ExpI2a, "sqrt2exp.I2a"},
    {BranchId::Sqrt2ExpI2b, "sqrt2exp.I2b"},
    {BranchId::Sqrt2ExpI3, "sqrt2exp.I3"},
    {BranchId::LogisticFp0, "logistic_fp0"},
    {BranchId::LogisticFpMu, "logistic_fpmu"},
    {BranchId::Radical, "radical"},
    {BranchId::GammaFp2, "gamma_fp2"},
    {BranchId::GammaFp1, "gamma_fp1"},
    {BranchId::ExpBaseI1, "exp_base.I1"},
};

}  // namespace

const char* branch_id_name(BranchId id) {
    for (const auto& e : kBranchNames)
        if (e.id == id) return e.name;
    throw DomainError("unknown branch id");
}

BranchId branch_id_from_name(const std::string& name) {
    for (const auto& e : kBranchNames)
        if (name == e.name) return e.id;
    throw DomainError("unknown branch id '" + name + "'");
}

std::string AbelBranch::id_string() const { return branch_id_name(id_); }

AbelBranch AbelBranch::build(BranchId id, const MapParams& params, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.working_bits();
    const Real inf_lo = Real::neg_inf(bits);
    const Real inf_hi = Real::pos_inf(bits);

    MapId map_id;
    switch (id) {
        case BranchId::Sqrt2ExpI1:
        case BranchId::Sqrt2ExpI2a: map_id = MapId::Sqrt2ExpFp2; break;
        case BranchId::Sqrt2ExpI2b:
        case BranchId::Sqrt2ExpI3:  map_id = MapId::Sqrt2ExpFp4; break;
        case BranchId::LogisticFp0: map_id = MapId::LogisticFp0; break;
        case BranchId::LogisticFpMu: map_id = MapId::LogisticFpMu; break;
        case BranchId::Radical:     map_id = MapId::Radical; break;
        case BranchId::GammaFp2:    map_id = MapId::GammaFp2; break;
        case BranchId::GammaFp1:    map_id = MapId::GammaFp1; break;
        case BranchId::ExpBaseI1:   map_id = MapId::ExpBase; break;
        default: throw DomainError("unknown branch id");
    }

    MapSpec spec = catalog(map_id, params, ctx);
    AbelBranch br(id, SchroederSolution(spec, ctx), ctx);
    const MapSpec& m = br.sol_.map();

    // Denominator of ln(sigma Phi)/denom: ln(multiplier) when the branch
    // iterates the family map itself, -ln(multiplier) when it iterates the
    // family's inverse.  Either way F(f(x)) = F(x) + 1 for the family f.
    br.denom_ = m.via_inverse ? -ln(m.multiplier) : ln(m.multiplier);

    switch (id) {
        case BranchId::Sqrt2ExpI1:
            br.sigma_ = -1;
            br.interval_ = {inf_lo, Real::from_long(2, bits)};
            br.eval_domain_ = br.interval_;
            br.anchor_ = Real::from_long(1, bits);
            br.increasing_ = true;
            br.range_floor_ = Real::from_long(-2, bits);
            break;
        case BranchId::Sqrt2ExpI2a:
            br.sigma_ = 1;
            br.interval_ = {Real::from_long(2, bits), Real::from_long(4, bits)};
            br.eval_domain_ = br.interval_;
            br.anchor_ = Real::from_long(3, bits);
            br.increasing_ = false;
            break;
        case BranchId::Sqrt2ExpI2b:
            br.sigma_ = -1;
            br.interval_ = {Real::from_long(2, bits), Real::from_long(4, bits)};
            br.eval_domain_ = br.interval_;
            br.anchor_ = Real::from_long(3, bits);
            br.increasing_ = false;
            break;
        case BranchId::Sqrt2ExpI3:
            br.sigma_ = 1;
            br.interval_ = {Real::from_long(4, bits), inf_hi};
            br.eval_domain_ = br.interval_;
            br.anchor_ = Real::from_long(5, bits);
            br.increasing_ = true;
            break;
        case BranchId::LogisticFp0:
            // No offset here; F is monotone left of the fold at 1/2 and the
            // half-iterates land there.
            br.sigma_ = 1;
            br.interval_ = {Real::from_long(0, bits), Real::from_ratio(1, 2, bits), false, true};
            br.eval_domain_ = {Real::from_long(0, bits), Real::from_long(1, bits)};
            br.increasing_ = false;
            break;
        case BranchId::LogisticFpMu: {
            br.sigma_ = 1;
            Real mu = m.fixed_point;
            br.interval_ = {mu, Real::from_ratio(1, 2, bits), false, true};
            br.eval_domain_ = {mu, 1L - mu};
            br.anchor_ = Real::from_ratio(1, 2, bits);
            br.increasing_ = false;
            br.fold_mirror_ = true;
            break;
        }
        case BranchId::Radical:
            br.sigma_ = 1;
            br.interval_ = {Real::from_long(-1, bits), m.fixed_point};
            br.eval_domain_ = br.interval_;
            br.anchor_ = Real::from_long(0, bits);
            br.increasing_ = true;
            br.range_floor_ = Real::from_long(-1, bits);
            break;
        case BranchId::GammaFp2:
            br.sigma_ = 1;
            br.interval_ = {Real::from_long(2, bits), inf_hi};
            br.eval_domain_ = {Real::from_long(2, bits), inf_hi};
            br.anchor_ = Real::from_long(3, bits);
            br.increasing_ = true;
            break;
        case BranchId::GammaFp1:
            // Monotone between the two fixed points; the zero sits at -1/2,
            // left of the basin's sign fold, where the same formula applies.
            br.sigma_ = 1;
            br.interval_ = {Real::from_long(1, bits), Real::from_long(2, bits)};
            br.eval_domain_ = {m.basin.lo, Real::from_long(2, bits)};
            br.anchor_ = Real::from_ratio(-1, 2, bits);
            br.increasing_ = false;
            br.excluded_.push_back(Real::from_long(0, bits));
            br.excluded_.push_back(Real::from_long(1, bits));
            break;
        case BranchId::ExpBaseI1:
            br.sigma_ = -1;
            br.interval_ = {inf_lo, m.fixed_point};
            br.eval_domain_ = br.interval_;
            br.anchor_ = Real::from_long(1, bits);
            br.increasing_ = true;
            br.range_floor_ = Real::from_long(-2, bits);
            break;
        default:
            throw DomainError("unknown branch id");
    }

    br.offset_ = Real::from_long(0, bits);
    if (br.anchor_) br.offset_ = br.abel_value(*br.anchor_);

    if (id == BranchId::GammaFp1) {
        // Inversion starts from the anchor's image, which lies on the
        // monotone piece: F(f(-1/2)) = 1.
        br.seed_x_ = br.family_step(*br.anchor_);
        br.seed_value_ = Real::from_long(1, bits);
    } else if (br.anchor_) {
        br.seed_x_ = *br.anchor_;
        br.seed_value_ = Real::from_long(0, bits);
    } else {
        br.seed_x_ = Real::from_ratio(1, 2, bits);
        br.seed_value_ = br.eval(br.seed_x_);
    }
    return br;
}

Real AbelBranch::abel_value(const Real& x) const {
    const MapSpec& m = sol_.map();
    Real y = m.to_conjugate(x);
    Real phi(m.orbit_bits);
    try {
        phi = sol_.value(y);
    } catch (const NonConvergenceError&) {
        // Too close to a fixed point: the finite-precision orbit cannot
        // leave the repelling neighbourhood, which is where F blows up.
        Real pad = pow10(-3, ctx_.working_bits());
        auto near_edge = [&](const Real& e) {
            return !e.is_inf() && abs(x - e) < pad * max(Real::from_long(1, x.bits()), abs(e));
        };
        if (near_edge(eval_domain_.lo) || near_edge(eval_domain_.hi))
            throw DivergenceError(id_string() + ": diverges next to the interval endpoint");
        throw;
    }
    Real arg = sigma_ > 0 ? phi : -phi;
    if (arg.sign() <= 0)
        throw DomainError(id_string() + ": point outside this branch's sign region");
    return ln(arg) / denom_;
}

Real AbelBranch::eval(const Real& x) const {
    if (x.is_nan()) throw DomainError(id_string() + ": NaN argument");
    if (!eval_domain_.contains(x))
        throw DomainError(id_string() + ": point outside the branch interval");
    for (const Real& e : excluded_)
        if (x == e)
            throw DomainError(id_string() + ": orbit hits a fixed point exactly");
    return abel_value(x) - offset_;
}

Real AbelBranch::family_step(const Real& x) const {
    const MapSpec& m = sol_.map();
    return m.via_inverse ? m.step_back(x) : m.step(x);
}

Real AbelBranch::family_step_back(const Real& x) const {
    const MapSpec& m = sol_.map();
    return m.via_inverse ? m.step(x) : m.step_back(x);
}

Real AbelBranch::fold_mirror(const Real& x) const {
    if (id_ != BranchId::LogisticFp0 && id_ != BranchId::LogisticFpMu)
        throw DomainError(id_string() + ": no fold symmetry on this branch");
    return 1L - x;
}

// Bracket [a, b] (by x) enclosing F = t, walking the seed's orbit so that
// consecutive points differ by exactly one in F.
std::pair<Real, Real> AbelBranch::bracket(const Real& t) const {
    const mpfr_prec_t bits = ctx_.working_bits();
    Real p = seed_x_;
    Real v = seed_value_;

    auto interior = [&](const Real& x) {
        return interval_.contains(x);
    };

    // Probes toward the low-F end of the interval until F drops under t.
    auto approach_low_end = [&](const Real& from) -> std::pair<Real, Real> {
        Real end = increasing_ ? interval_.lo : interval_.hi;
        if (end.is_inf()) {
            Real q = -max(Real::from_long(1, bits), 2L * abs(from));
            if (!increasing_) q = -q;
            for (long j = 0; j < ctx_.max_iterations; ++j) {
                Real fq = eval(q);
                if (fq < t) return {q, fq};
                q = q * 2L;
            }
        } else {
            if (from == end)
                throw RangeError(id_string() + ": t below the branch range");
            Real gap = (from - end) / 2L;
            for (long j = 0; j < ctx_.max_iterations; ++j) {
                Real q = end + gap;
                Real fq = eval(q);
                if (fq < t) return {q, fq};
                gap = gap / 2L;
            }
        }
        throw NonConvergenceError(id_string() + ": no lower bracket for t");
    };

    if (t == v) return {p, p};

    if (t > v) {
        // March the orbit up; each family step raises F by one.
        for (long i = 0; i < ctx_.max_iterations; ++i) {
            Real next = family_step(p);
            if (next.is_inf())
                throw RangeError(id_string() +
                                 ": inverse at this height exceeds the representable range");
            if (t <= v + 1L) {
                Real lo = increasing_ ? p : next;
                Real hi = increasing_ ? next : p;
                return {lo, hi};
            }
            p = next;
            v = v + 1L;
        }
        throw NonConvergenceError(id_string() + ": bracket walk exceeded max_iterations");
    }

    // March down.  Stepping may leave the interval or the map's domain;
    // from there approach the low-F endpoint geometrically.
    for (long i = 0; i < ctx_.max_iterations; ++i) {
        Real next(bits);
        bool stepped = false;
        try {
            next = family_step_back(p);
            stepped = interior(next) || t >= v - 1L;
        } catch (const DomainError&) {
            stepped = false;
        }
        if (!stepped || !(increasing_ ? next < p : next > p)) {
            auto [q, fq] = approach_low_end(p);
            (void)fq;
            Real lo = increasing_ ? q : p;
            Real hi = increasing_ ? p : q;
            return {lo, hi};
        }
        if (t >= v - 1L) {
            Real lo = increasing_ ? next : p;
            Real hi = increasing_ ? p : next;
            return {lo, hi};
        }
        p = next;
        v = v - 1L;
    }
    throw NonConvergenceError(id_string() + ": bracket walk exceeded max_iterations");
}

Real AbelBranch::invert(const Real& t_in) const {
    const mpfr_prec_t bits = ctx_.working_bits();
    if (t_in.is_nan()) throw DomainError(id_string() + ": NaN target");
    Real t = t_in.rounded_to(bits);
    if (range_floor_ && !(t > *range_floor_))
        throw RangeError(id_string() + ": t outside the branch range (floor " +
                         range_floor_->to_fixed(2) + ")");

    auto [a, b] = bracket(t);
    if (a == b) return a;

    auto residual = [&](const Real& x) { return eval(x) - t; };
    // An endpoint produced by the orbit walk may sit on the open interval
    // boundary (the radical branch steps back onto -1 exactly); its
    // residual sign is known without evaluating there.
    Real ra = interval_.contains(a) ? residual(a)
                                    : Real::from_long(increasing_ ? -1 : 1, bits);
    Real rb = interval_.contains(b) ? residual(b)
                                    : Real::from_long(increasing_ ? 1 : -1, bits);
    Real tol = pow10(-(ctx_.stop_digits() - 2), bits) * max(Real::from_long(1, bits), abs(t));
    if (ra.sign() == rb.sign()) {
        // The root coincides with a bracket endpoint: evaluation noise can
        // put both residuals on one side.  Integer t lands exactly on the
        // anchor orbit, so the nearer endpoint is the answer.
        Real aa = abs(ra), ab = abs(rb);
        if (min(aa, ab) <= 4L * tol) return aa <= ab ? a : b;
        throw NonConvergenceError(id_string() + ": bracket lost around t");
    }
    return bracketed_root(residual, a, b, ra, rb, tol, ctx_.working_digits() - 2,
                          ctx_.max_iterations);
}

Real branch_difference(const AbelBranch& via_forward, const AbelBranch& via_inverse, const Real& t) {
    if (abs(t) > 4L)
        throw DomainError("branch_difference: t outside [-4, 4]");
    return via_forward.invert(t) - via_inverse.invert(t);
}

Real branch_difference(const Real& t, const PrecisionContext& ctx) {
    PrecisionContext wide = PrecisionContext::for_digits(ctx.target_digits + 30);
    if (ctx.max_iterations > wide.max_iterations) wide.max_iterations = ctx.max_iterations;
    AbelBranch a = AbelBranch::build(BranchId::Sqrt2ExpI2a, {}, wide);
    AbelBranch b = AbelBranch::build(BranchId::Sqrt2ExpI2b, {}, wide);
    return branch_difference(a, b, t.rounded_to(wide.working_bits()));
}

}  // namespace fraciter
