#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fraciter/constants.hpp"
#include "fraciter/errors.hpp"
#include "fraciter/gamma.hpp"
#include "test_support.hpp"

using namespace fraciter;

namespace {

const PrecisionContext ctx = PrecisionContext::for_digits(50);
const GammaEvaluator& ev() {
    static GammaEvaluator e(ctx);
    return e;
}

Real mpfr_gamma_oracle(const Real& x, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_gamma(r.raw(), x.rounded_to(bits).raw(), MPFR_RNDN);
    return r;
}

}  // namespace

TEST_CASE("classical values") {
    const mpfr_prec_t wb = ctx.working_bits();
    Real tol = pow10(1 - ctx.target_digits, wb);
    CHECK(abs(ev().gamma(Real::from_ratio(1, 2, wb)) - sqrt_pi(ctx)) < tol);
    CHECK(abs(ev().gamma(Real::from_long(4, wb)) - 6L) < tol);
    // f(2) = Gamma(3) = 2 is the repelling fixed point.
    CHECK(abs(ev().gamma(Real::from_long(3, wb)) - 2L) < tol);
    CHECK(abs(ev().f_gamma(Real::from_long(1, wb)) - 1L) < tol);
    CHECK(abs(ev().f_gamma(Real::from_ratio(-1, 2, wb)) - sqrt_pi(ctx)) < tol);
}

TEST_CASE("absolute error stays below the guaranteed bound on [0.25, 50]") {
    // Independent oracle: MPFR's own gamma, at well above the evaluator's
    // internal precision.
    const mpfr_prec_t check_bits = ev().value_bits() + 64;
    Real bound = pow10(-(ctx.working_digits() - 2), check_bits);
    const char* points[] = {"0.25", "0.31", "0.5",  "0.75", "1.0",   "1.5",  "2.75",
                            "3.5",  "7.25", "12.5", "20.25", "33.75", "41.5", "50.0"};
    for (const char* p : points) {
        Real x = Real::from_string(p, check_bits);
        Real mine = ev().gamma(x);
        Real oracle = mpfr_gamma_oracle(x, check_bits);
        CHECK(abs(mine - oracle) < bound);
    }
}

TEST_CASE("approximation order grows with the requested digits") {
    CHECK(ev().approximation_order() > ctx.working_digits());
    GammaEvaluator small(PrecisionContext::for_digits(15));
    CHECK(small.approximation_order() < ev().approximation_order());
}

TEST_CASE("recurrence gamma(x+1) = x gamma(x)") {
    const mpfr_prec_t wb = ctx.working_bits();
    Real tol = pow10(1 - ctx.target_digits, wb);
    const char* points[] = {"0.25", "0.6", "1.3", "2.5", "9.75", "17.5", "26.25", "40.0"};
    for (const char* p : points) {
        Real x = Real::from_string(p, wb);
        Real lhs = ev().gamma(x + 1L);
        Real rhs = x * ev().gamma(x);
        CHECK(abs(lhs - rhs) <= tol * max(Real::from_long(1, wb), abs(rhs)));
    }
}

TEST_CASE("derivative of f at the repelling fixed point") {
    // Central difference of Gamma(1+x) at x = 2 against 3 - 2 euler_gamma.
    const mpfr_prec_t wb = ev().value_bits();
    Real h = pow10(-(ctx.target_digits / 2), wb);
    Real two = Real::from_long(2, wb);
    Real slope = (ev().f_gamma(two + h) - ev().f_gamma(two - h)) / (2L * h);
    Real expected = 3L - 2L * euler_gamma(ctx);
    CHECK(abs(slope - expected) < pow10(-(ctx.target_digits / 2), wb));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(ev().gamma(Real::from_long(0, 64)), DomainError);
    CHECK_THROWS_AS(ev().gamma(Real::from_long(-3, 64)), DomainError);
    CHECK_THROWS_AS(ev().f_gamma(Real::from_long(-1, 64)), DomainError);
    CHECK_THROWS_AS(ev().f_gamma(Real::from_long(-2, 64)), DomainError);
    // Below the branch minimum of Gamma(1+x).
    CHECK_THROWS_AS(ev().inverse_f_gamma(Real::from_ratio(1, 2, 64)), DomainError);
}

TEST_CASE("inverse on the increasing branch") {
    const mpfr_prec_t wb = ctx.working_bits();
    Real tol = pow10(1 - ctx.target_digits, wb);
    CHECK(abs(ev().inverse_f_gamma(Real::from_long(6, wb)) - 3L) < tol);
    CHECK(abs(ev().inverse_f_gamma(Real::from_long(2, wb)) - 2L) < tol);
    CHECK(abs(ev().inverse_f_gamma(Real::from_long(24, wb)) - 4L) < tol);
}

TEST_CASE("inverse round-trip over [1, 1e6]") {
    const mpfr_prec_t wb = ctx.working_bits();
    Real tol = pow10(1 - ctx.target_digits, wb);
    const char* ws[] = {"1", "1.5", "3.25", "10", "120.5", "999.25", "31415.9", "1000000"};
    for (const char* s : ws) {
        Real w = Real::from_string(s, wb);
        Real x = ev().inverse_f_gamma(w);
        CHECK(abs(ev().f_gamma(x) - w) <= tol * max(Real::from_long(1, wb), abs(w)));
    }
}

TEST_CASE("inverse is strictly increasing") {
    const mpfr_prec_t wb = ctx.working_bits();
    Real prev(wb);
    bool have = false;
    for (long w = 1; w <= 4096; w *= 4) {
        Real x = ev().inverse_f_gamma(Real::from_long(w, wb));
        if (have) CHECK(x > prev);
        prev = x;
        have = true;
    }
}

TEST_CASE("hinted inverse agrees with the bracketed solve") {
    const mpfr_prec_t wb = ctx.working_bits();
    Real w = Real::from_string("2.125", wb);
    Real cold = ev().inverse_f_gamma(w);
    Real hinted = ev().inverse_f_gamma(w, cold + pow10(-8, wb));
    Real off = ev().inverse_f_gamma(w, Real::from_long(9, wb));  // poor hint falls back
    Real tol = pow10(-(2 * ctx.working_digits()), wb);
    CHECK(abs(cold - hinted) <= tol * abs(cold));
    CHECK(abs(cold - off) <= tol * abs(cold));
}

TEST_CASE("branch minimum sits where the curve turns") {
    const mpfr_prec_t wb = ctx.working_bits();
    // The minimum of Gamma on (1, 2) is at 1.46163..., shifted down by 1
    // for Gamma(1+x).
    CHECK(ev().branch_argmin() > Real::from_string("0.4616", wb));
    CHECK(ev().branch_argmin() < Real::from_string("0.4617", wb));
    Real h = pow10(-20, wb);
    CHECK(ev().f_gamma(ev().branch_argmin() + h) >= ev().branch_min());
    CHECK(ev().f_gamma(ev().branch_argmin() - h) >= ev().branch_min());
}
