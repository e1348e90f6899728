#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "fraciter/gamma.hpp"
#include "fraciter/precision.hpp"
#include "fraciter/real.hpp"

namespace fraciter {

// Exact rational parameter (CLI inputs like 4/3 stay exact until the last
// moment).
struct Rational {
    long num = 0;
    long den = 1;
    Real to_real(mpfr_prec_t bits) const { return Real::from_ratio(num, den, bits); }
    std::string str() const;
};

enum class MapId {
    Sqrt2ExpFp2,   // f(x) = 2^{x/2} near its attracting fixed point 2
    Sqrt2ExpFp4,   // g(x) = 2 ln x / ln 2 near its attracting fixed point 4
    LogisticFp0,   // f(x) = lambda x (1-x), 0 < lambda < 1, fixed point 0
    LogisticFpMu,  // same family, 1 < lambda < 2, fixed point (lambda-1)/lambda
    Radical,       // f(x) = sqrt(1+x), fixed point golden ratio
    GammaFp1,      // f(x) = Gamma(1+x) near 1
    GammaFp2,      // inverse of Gamma(1+x) near 2
    ExpBase,       // f(x) = c^x, 1 < c < e^{1/e}, lower fixed point
};

struct MapParams {
    std::optional<Rational> lambda;
    std::optional<Rational> base;
    bool base_sqrt2 = false;  // exp_base with c = sqrt 2
};

struct Interval {
    Real lo;
    Real hi;
    bool lo_closed = false;
    bool hi_closed = false;

    bool contains(const Real& x) const {
        if (lo_closed ? !(x >= lo) : !(x > lo)) return false;
        if (hi_closed ? !(x <= hi) : !(x < hi)) return false;
        return true;
    }
};

// One catalog entry: a map in conjugated form (fixed point shifted to 0)
// with its multiplier, shift convention, and attraction basin.
struct MapSpec {
    std::string name;
    MapId id{};
    MapParams params;
    Real fixed_point;
    Real multiplier;  // derivative of the conjugate at 0; always in (0,1)
    enum class Shift { XMinusP, PMinusX } shift = Shift::XMinusP;
    Interval basin;           // raw coordinates
    Interval monotone_basin;  // raw sub-basin where the step map increases
    bool via_inverse = false; // entry iterates the inverse of the family map
    mpfr_prec_t orbit_bits = 0;
    std::shared_ptr<const GammaEvaluator> gamma;  // set for the Gamma entries

    // One application of this entry's iterated map / its inverse.
    Real step(const Real& x) const { return step_(x); }
    Real step_back(const Real& x) const { return step_back_(x); }
    // Shifted map with the fixed point at 0; checks only mathematical
    // evaluability, basin membership is the caller's precondition.
    Real conjugate(const Real& y) const { return conj_(y); }

    Real to_conjugate(const Real& x) const {
        return shift == Shift::XMinusP ? x - fixed_point : fixed_point - x;
    }
    Real from_conjugate(const Real& y) const {
        return shift == Shift::XMinusP ? fixed_point + y : fixed_point - y;
    }
    Interval shifted_basin() const;

    std::function<Real(const Real&)> step_, step_back_, conj_;
};

// Builds a fully populated catalog entry.  Throws DomainError for unknown
// combinations or parameters out of range.
MapSpec catalog(MapId id, const MapParams& params, const PrecisionContext& ctx);

// Public conjugate-map evaluation: precondition y in the shifted basin.
Real eval_conjugate(const MapSpec& spec, const Real& y);

// Smaller root of c^x = x for 1 < c < e^{1/e}, by bisection on [1, e].
Real lower_fixed_point_exp(const Real& c, const PrecisionContext& ctx);
// Larger root (it bounds the attraction basin from above).
Real upper_fixed_point_exp(const Real& c, const PrecisionContext& ctx);

}  // namespace fraciter
