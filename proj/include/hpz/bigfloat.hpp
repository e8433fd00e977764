#pragma once

#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "hpz/rational.hpp"

namespace hpz {

/// Arbitrary-precision binary float. Each value carries its own mantissa
/// precision; binary operations round once to the larger of the two operand
/// precisions (MPFR round-to-nearest), so results are deterministic and
/// independent of evaluation order ambiguities a global precision would cause.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 128); mpfr_set_zero(v_, 1); }
    explicit BigFloat(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_long(long x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_double(double x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec) {
        BigFloat r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("bad decimal literal: " + s);
        return r;
    }
    /// 2^e
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    /// Copies the value but keeps this object's own precision (plain
    /// assignment adopts the source precision instead).
    void set_value(const BigFloat& o) { mpfr_set(v_, o.v_, MPFR_RNDN); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long exponent() const { return mpfr_get_exp(v_); }

    std::string to_string(int sig_digits = 40) const {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "%.*Rg", sig_digits, v_) < 0)
            throw std::runtime_error("mpfr_asprintf failed");
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(join(x, y));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow_si(const BigFloat& a, long e) {
        BigFloat r(a.prec());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }

    friend void swap(BigFloat& a, BigFloat& b) noexcept { mpfr_swap(a.v_, b.v_); }

private:
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }
    mpfr_t v_;
};

}  // namespace hpz
