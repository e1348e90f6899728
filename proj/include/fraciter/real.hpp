#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace fraciter {

// Arbitrary-precision real number backed by MPFR.
//
// Every value carries its own precision in bits.  Binary operations round
// to the wider operand's precision, so precision decisions are explicit at
// value-creation sites and results are bit-for-bit reproducible.  There is
// no global rounding or precision state; everything uses round-to-nearest
// (ties to even).
class Real {
public:
    Real() { mpfr_init2(v_, 64); }
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); }

    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, other.v_);
    }
    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& other) noexcept {
        if (this != &other) mpfr_swap(v_, other.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real from_long(long v, mpfr_prec_t bits);
    static Real from_double(double v, mpfr_prec_t bits);
    // Parses a base-10 literal; throws DomainError if the string is not a
    // plain decimal number.
    static Real from_string(const std::string& decimal, mpfr_prec_t bits);
    static Real from_ratio(long num, long den, mpfr_prec_t bits);
    static Real pos_inf(mpfr_prec_t bits);
    static Real neg_inf(mpfr_prec_t bits);

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    Real rounded_to(mpfr_prec_t bits) const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Fixed-point decimal rendering with `frac_digits` digits after the
    // point, round-half-even.  "-0.000...0" is normalised to "0.000...0".
    std::string to_fixed(int frac_digits) const;
    // Scientific rendering, mostly for diagnostics.
    std::string to_sci(int significant_digits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    Real operator-() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator+=(long v);
    Real& operator-=(long v);
    Real& operator*=(long v);
    Real& operator/=(long v);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(long a, const Real& b);
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(long a, const Real& b);

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator!=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) != 0; }

private:
    mpfr_t v_;
};

// Elementary functions.  Results carry the argument's precision (the wider
// one for two-argument forms).  Domain violations throw DomainError.
Real exp(const Real& x);
Real ln(const Real& x);      // x > 0
Real expm1(const Real& x);
Real log1p(const Real& x);   // x > -1
Real sqrt(const Real& x);    // x >= 0
Real pow(const Real& base, const Real& exponent);
Real abs(const Real& x);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

// 10^e at the given precision; handy for tolerances.
Real pow10(long e, mpfr_prec_t bits);

}  // namespace fraciter
