#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fraciter/constants.hpp"
#include "fraciter/errors.hpp"
#include "fraciter/maps.hpp"
#include "test_support.hpp"

using namespace fraciter;

namespace {

const PrecisionContext ctx = PrecisionContext::for_digits(30);

struct Entry {
    MapSpec spec;
    Real conj_sample;  // a point of the shifted basin for consistency checks
};

std::vector<Entry> small_catalog() {
    const mpfr_prec_t wb = ctx.working_bits();
    std::vector<Entry> out;
    out.push_back({catalog(MapId::Sqrt2ExpFp2, {}, ctx), Real::from_ratio(1, 2, wb)});
    out.push_back({catalog(MapId::Sqrt2ExpFp4, {}, ctx), Real::from_ratio(1, 2, wb)});
    out.push_back({catalog(MapId::LogisticFp0, {Rational{1, 2}}, ctx), Real::from_ratio(1, 4, wb)});
    out.push_back({catalog(MapId::LogisticFpMu, {Rational{3, 2}}, ctx), Real::from_ratio(1, 8, wb)});
    out.push_back({catalog(MapId::Radical, {}, ctx), Real::from_ratio(1, 2, wb)});
    MapParams exp_p;
    exp_p.base = Rational{4, 3};
    out.push_back({catalog(MapId::ExpBase, exp_p, ctx), Real::from_ratio(-1, 2, wb)});
    return out;
}

}  // namespace

TEST_CASE("multipliers match their closed forms") {
    const mpfr_prec_t wb = ctx.working_bits();
    Real tol = pow10(1 - ctx.target_digits, wb);

    CHECK(abs(catalog(MapId::Sqrt2ExpFp2, {}, ctx).multiplier - ln2(ctx)) < tol);
    CHECK(abs(catalog(MapId::Sqrt2ExpFp4, {}, ctx).multiplier - 1L / (2L * ln2(ctx))) < tol);
    CHECK(abs(catalog(MapId::LogisticFp0, {Rational{1, 3}}, ctx).multiplier -
              Real::from_ratio(1, 3, wb)) < tol);
    CHECK(abs(catalog(MapId::LogisticFpMu, {Rational{3, 2}}, ctx).multiplier -
              Real::from_ratio(1, 2, wb)) < tol);
    CHECK(abs(catalog(MapId::Radical, {}, ctx).multiplier - 1L / (2L * golden_ratio(ctx))) < tol);

    MapSpec g1 = catalog(MapId::GammaFp1, {}, ctx);
    MapSpec g2 = catalog(MapId::GammaFp2, {}, ctx);
    Real eg = euler_gamma(ctx);
    CHECK(abs(g1.multiplier - (1L - eg)) < tol);
    CHECK(abs(g2.multiplier - 1L / (3L - 2L * eg)) < tol);
}

TEST_CASE("exp_base at sqrt 2 reproduces the dedicated entry") {
    MapParams p;
    p.base_sqrt2 = true;
    MapSpec m = catalog(MapId::ExpBase, p, ctx);
    Real tol = pow10(1 - ctx.target_digits, ctx.working_bits());
    CHECK(abs(m.fixed_point - 2L) < tol);
    CHECK(abs(m.multiplier - ln2(ctx)) < tol);
    CHECK(abs(m.basin.hi - 4L) < tol);  // upper fixed point bounds the basin
}

TEST_CASE("conjugates fix the origin and match their multiplier") {
    const mpfr_prec_t wb = ctx.working_bits();
    Real zero = Real::from_long(0, wb);
    Real fd_tol = pow10(-(ctx.target_digits / 2), wb);
    for (const auto& e : small_catalog()) {
        CAPTURE(e.spec.name);
        CHECK(abs(e.spec.conjugate(zero)) < pow10(-ctx.working_digits(), wb));
        Real h = pow10(-(ctx.target_digits / 2), wb);
        Real slope = (e.spec.conjugate(h) - e.spec.conjugate(-h)) / (2L * h);
        CHECK(abs(slope - e.spec.multiplier) < fd_tol);
    }
}

TEST_CASE("gamma conjugates fix the origin and match their multiplier") {
    MapSpec g1 = catalog(MapId::GammaFp1, {}, ctx);
    MapSpec g2 = catalog(MapId::GammaFp2, {}, ctx);
    for (const MapSpec* m : {&g1, &g2}) {
        CAPTURE(m->name);
        const mpfr_prec_t ob = m->orbit_bits;
        CHECK(abs(m->conjugate(Real::from_long(0, ob))) < pow10(-2 * ctx.working_digits(), ob));
        Real h = pow10(-(ctx.target_digits / 2), ob);
        Real slope = (m->conjugate(h) - m->conjugate(-h)) / (2L * h);
        CHECK(abs(slope - m->multiplier) < pow10(-(ctx.target_digits / 2), ob));
    }
}

TEST_CASE("tangency: |conj(y) - s y| <= C y^2 on a geometric grid") {
    const Real C = Real::from_long(4, ctx.working_bits());
    for (const auto& e : small_catalog()) {
        CAPTURE(e.spec.name);
        for (int j = 2; j <= 12; ++j) {
            Real y = pow10(-j, ctx.working_bits());
            Real lhs = abs(e.spec.conjugate(y) - e.spec.multiplier * y);
            CHECK(lhs <= C * y * y);
        }
    }
}

TEST_CASE("raw and conjugate coordinates commute") {
    Real tol = pow10(1 - ctx.target_digits, ctx.working_bits());
    for (const auto& e : small_catalog()) {
        CAPTURE(e.spec.name);
        Real x = e.spec.from_conjugate(e.conj_sample);
        Real via_raw = e.spec.step(x);
        Real via_conj = e.spec.from_conjugate(e.spec.conjugate(e.conj_sample));
        CHECK(abs(via_raw - via_conj) <= tol * max(Real::from_long(1, tol.bits()), abs(via_raw)));
    }
}

TEST_CASE("eval_conjugate enforces the basin") {
    MapSpec m = catalog(MapId::Sqrt2ExpFp2, {}, ctx);
    const mpfr_prec_t wb = ctx.working_bits();
    CHECK_THROWS_AS(eval_conjugate(m, Real::from_long(3, wb)), DomainError);  // raw 5 > 4
    CHECK(abs(eval_conjugate(m, Real::from_long(2, wb)) - 2L) <
          pow10(1 - ctx.target_digits, wb));  // raw fixed point 4 maps to itself

    MapSpec psi = catalog(MapId::Sqrt2ExpFp4, {}, ctx);
    CHECK_THROWS_AS(psi.conjugate(Real::from_long(-4, wb)), DomainError);
    MapSpec rad = catalog(MapId::Radical, {}, ctx);
    CHECK_THROWS_AS(rad.conjugate(Real::from_long(3, wb)), DomainError);  // above 1+phi
}

TEST_CASE("radical conjugate at the golden ratio") {
    // g(phi) = phi - sqrt(1) exactly.
    MapSpec rad = catalog(MapId::Radical, {}, ctx);
    Real phi = golden_ratio(ctx);
    Real tol = pow10(1 - ctx.target_digits, phi.bits());
    CHECK(abs(rad.conjugate(phi) - (phi - 1L)) < tol);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(catalog(MapId::LogisticFp0, {Rational{3, 2}}, ctx), DomainError);
    CHECK_THROWS_AS(catalog(MapId::LogisticFp0, {Rational{1, 1}}, ctx), DomainError);
    CHECK_THROWS_AS(catalog(MapId::LogisticFpMu, {Rational{1, 2}}, ctx), DomainError);
    CHECK_THROWS_AS(catalog(MapId::LogisticFpMu, {}, ctx), DomainError);
    MapParams too_big;
    too_big.base = Rational{3, 2};  // above e^(1/e)
    CHECK_THROWS_AS(catalog(MapId::ExpBase, too_big, ctx), DomainError);
    MapParams one;
    one.base = Rational{1, 1};
    CHECK_THROWS_AS(catalog(MapId::ExpBase, one, ctx), DomainError);
}

TEST_CASE("lower fixed point of c^x = x") {
    const mpfr_prec_t wb = ctx.working_bits();
    Real tol = pow10(1 - ctx.target_digits, wb);

    Real p_sqrt2 = lower_fixed_point_exp(sqrt(Real::from_long(2, wb)), ctx);
    CHECK(abs(p_sqrt2 - 2L) < tol);

    Real c43 = Real::from_ratio(4, 3, wb);
    Real p43 = lower_fixed_point_exp(c43, ctx);
    CHECK(abs(pow(c43, p43) - p43) < tol);

    Real c65 = Real::from_ratio(6, 5, wb);
    Real p65 = lower_fixed_point_exp(c65, ctx);
    CHECK(p65 > 1L);
    CHECK(p65 < exp(Real::from_long(1, wb)));
    CHECK(abs(pow(c65, p65) - p65) < tol);

    CHECK_THROWS_AS(lower_fixed_point_exp(Real::from_long(2, wb), ctx), DomainError);
}

TEST_CASE("multiplier equals ln of the fixed point for exponential bases") {
    // c^p = p gives p ln c = ln p; both routes must agree.
    MapParams p;
    p.base = Rational{5, 4};
    MapSpec m = catalog(MapId::ExpBase, p, ctx);
    CHECK(abs(m.multiplier - ln(m.fixed_point)) < pow10(1 - ctx.target_digits, ctx.working_bits()));
}
