#include "fraciter/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

#include "fraciter/errors.hpp"

namespace fraciter {

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) {
    return std::max(a.bits(), b.bits());
}

}  // namespace

Real Real::from_long(long v, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_si(r.raw(), v, MPFR_RNDN);
    return r;
}

Real Real::from_double(double v, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_d(r.raw(), v, MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& decimal, mpfr_prec_t bits) {
    Real r(bits);
    const char* s = decimal.c_str();
    char* end = nullptr;
    mpfr_strtofr(r.raw(), s, &end, 10, MPFR_RNDN);
    if (end == s || *end != '\0')
        throw DomainError("not a decimal number: '" + decimal + "'");
    return r;
}

Real Real::from_ratio(long num, long den, mpfr_prec_t bits) {
    if (den == 0) throw DomainError("zero denominator");
    Real r = from_long(num, bits);
    mpfr_div_si(r.raw(), r.raw(), den, MPFR_RNDN);
    return r;
}

Real Real::pos_inf(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_inf(r.raw(), +1);
    return r;
}

Real Real::neg_inf(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_inf(r.raw(), -1);
    return r;
}

Real Real::rounded_to(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.raw(), v_, MPFR_RNDN);
    return r;
}

std::string Real::to_fixed(int frac_digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*f", frac_digits, MPFR_RNDN, v_) < 0)
        throw Error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    // A value that rounds to zero prints without a sign.
    if (!out.empty() && out[0] == '-' &&
        out.find_first_not_of("0.", 1) == std::string::npos) {
        out.erase(0, 1);
    }
    return out;
}

std::string Real::to_sci(int significant_digits) const {
    char* s = nullptr;
    if (significant_digits < 1) significant_digits = 1;
    if (mpfr_asprintf(&s, "%.*R*e", significant_digits - 1, MPFR_RNDN, v_) < 0)
        throw Error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real Real::operator-() const {
    Real r(bits());
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator+=(long v) { mpfr_add_si(v_, v_, v, MPFR_RNDN); return *this; }
Real& Real::operator-=(long v) { mpfr_sub_si(v_, v_, v, MPFR_RNDN); return *this; }
Real& Real::operator*=(long v) { mpfr_mul_si(v_, v_, v, MPFR_RNDN); return *this; }
Real& Real::operator/=(long v) {
    if (v == 0) throw DomainError("division by zero");
    mpfr_div_si(v_, v_, v, MPFR_RNDN);
    return *this;
}

Real operator+(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, long b) {
    Real r(a.bits());
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, long b) {
    Real r(a.bits());
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, long b) {
    Real r(a.bits());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    if (b == 0) throw DomainError("division by zero");
    Real r(a.bits());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

Real operator-(long a, const Real& b) {
    Real r(b.bits());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

Real operator/(long a, const Real& b) {
    Real r(b.bits());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r(x.bits());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real ln(const Real& x) {
    if (x.sign() <= 0) throw DomainError("ln requires a positive argument");
    Real r(x.bits());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real expm1(const Real& x) {
    Real r(x.bits());
    mpfr_expm1(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log1p(const Real& x) {
    if (x <= -1L) throw DomainError("log1p requires argument > -1");
    Real r(x.bits());
    mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    if (x.sign() < 0) throw DomainError("sqrt requires a non-negative argument");
    Real r(x.bits());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& base, const Real& exponent) {
    Real r(wider(base, exponent));
    mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
    if (r.is_nan() && !base.is_nan() && !exponent.is_nan())
        throw DomainError("pow: negative base with non-integer exponent");
    return r;
}

Real abs(const Real& x) {
    Real r(x.bits());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real floor(const Real& x) {
    Real r(x.bits());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

Real pow10(long e, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_si(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

}  // namespace fraciter
