#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fraciter/koenig.hpp"
#include "fraciter/maps.hpp"

namespace fraciter {

enum class BranchId {
    Sqrt2ExpI1,   // (-inf, 2), zero at 1
    Sqrt2ExpI2a,  // (2, 4) built from the forward map, zero at 3
    Sqrt2ExpI2b,  // (2, 4) built from the inverse map, zero at 3
    Sqrt2ExpI3,   // (4, inf), zero at 5
    LogisticFp0,  // 0 < lambda < 1, no normalisation offset
    LogisticFpMu, // 1 < lambda < 2, zero at 1/2
    Radical,      // (-1, golden ratio), zero at 0
    GammaFp2,     // (2, inf), zero at 3
    GammaFp1,     // monotone piece (1, 2), zero at -1/2
    ExpBaseI1,    // (-inf, lower fixed point), zero at 1
};

const char* branch_id_name(BranchId id);
BranchId branch_id_from_name(const std::string& name);

// One monotone branch of an Abel function F with F(f(x)) = F(x) + 1,
// built as F(x) = ln(sigma * Phi(shift(x))) / denom - offset from a
// Schroeder solution Phi.
class AbelBranch {
public:
    static AbelBranch build(BranchId id, const MapParams& params, const PrecisionContext& ctx);

    // F(x).  Throws DomainError outside the branch, DivergenceError when
    // the evaluation point sits too close to a fixed point to resolve.
    Real eval(const Real& x) const;

    // The unique x in interval() with F(x) = t.  Brackets from the anchor
    // orbit, bisects to ~10 digits, then refines by secant steps kept
    // inside the live bracket.
    Real invert(const Real& t) const;

    BranchId id() const { return id_; }
    std::string id_string() const;
    const MapSpec& map() const { return sol_.map(); }
    const SchroederSolution& schroeder() const { return sol_; }
    const PrecisionContext& context() const { return ctx_; }

    const Interval& interval() const { return interval_; }        // inversion piece
    const Interval& eval_domain() const { return eval_domain_; }  // where F is defined
    bool increasing() const { return increasing_; }
    const std::optional<Real>& anchor() const { return anchor_; }
    const Real& offset() const { return offset_; }
    const std::optional<Real>& range_floor() const { return range_floor_; }

    // The logistic family above lambda = 1 customarily reports the
    // half-iterate root on the far side of the fold; these expose that.
    bool reports_fold_mirror() const { return fold_mirror_; }
    Real fold_mirror(const Real& x) const;

    // Family map steps: F(family_step(x)) = F(x) + 1.
    Real family_step(const Real& x) const;
    Real family_step_back(const Real& x) const;

private:
    AbelBranch(BranchId id, SchroederSolution sol, const PrecisionContext& ctx)
        : id_(id), sol_(std::move(sol)), ctx_(ctx) {}

    Real abel_value(const Real& x) const;  // ln(sigma Phi)/denom, no offset
    std::pair<Real, Real> bracket(const Real& t) const;
    Real refine(const Real& t, Real a, Real b, Real fa, Real fb) const;

    BranchId id_;
    SchroederSolution sol_;
    PrecisionContext ctx_;
    Interval interval_;
    Interval eval_domain_;
    int sigma_ = 1;
    Real denom_;
    std::optional<Real> anchor_;
    Real offset_;
    Real seed_x_;
    Real seed_value_;
    bool increasing_ = true;
    std::optional<Real> range_floor_;
    bool fold_mirror_ = false;
    std::vector<Real> excluded_;
};

inline AbelBranch build_branch(BranchId id, const MapParams& params, const PrecisionContext& ctx) {
    return AbelBranch::build(id, params, ctx);
}
inline Real abel_eval(const AbelBranch& branch, const Real& x) { return branch.eval(x); }
inline Real abel_invert(const AbelBranch& branch, const Real& t) { return branch.invert(t); }

// w(t): gap between the two middle-interval Abel solutions of 2^{x/2},
// measured between their inverses at height t.  |w| is around 1e-25, so
// the work runs with 30 digits beyond the caller's target.
Real branch_difference(const AbelBranch& via_forward, const AbelBranch& via_inverse, const Real& t);
Real branch_difference(const Real& t, const PrecisionContext& ctx);

}  // namespace fraciter
