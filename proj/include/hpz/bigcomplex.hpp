#pragma once

#include <stdexcept>
#include <string>

#include "hpz/bigfloat.hpp"

namespace hpz {

struct non_finite_error : std::runtime_error {
    non_finite_error() : std::runtime_error("non-finite value escaped an operation") {}
};

/// Complex scalar over BigFloat. Both parts share the owning context's
/// precision by construction.
class BigComplex {
public:
    BigFloat re, im;

    BigComplex() = default;
    explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex from_long(long r, long i, mpfr_prec_t prec) {
        return {BigFloat::from_long(r, prec), BigFloat::from_long(i, prec)};
    }
    static BigComplex from_real(BigFloat r) {
        BigFloat z(r.prec());
        return {std::move(r), std::move(z)};
    }
    static BigComplex from_rational(const Rational& q, mpfr_prec_t prec) {
        return from_real(BigFloat::from_rational(q, prec));
    }
    static BigComplex from_strings(const std::string& r, const std::string& i, mpfr_prec_t prec) {
        return {BigFloat::from_string(r, prec), BigFloat::from_string(i, prec)};
    }
    static BigComplex i_unit(mpfr_prec_t prec) { return from_long(0, 1, prec); }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    /// Value copy that keeps this object's precision. Accumulation targets
    /// (matrix cells, series coefficients) must be written through this, or a
    /// low-precision source would silently retag the cell and every later
    /// in-place update would round at the narrow precision.
    void set_value(const BigComplex& o) {
        re.set_value(o.re);
        im.set_value(o.im);
    }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        if (d.is_zero()) throw std::domain_error("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
    /// |re| + |im|; cheap magnitude used for pivot searches.
    friend BigFloat mag1(const BigComplex& a) { return abs(a.re) + abs(a.im); }
    friend BigFloat abs2(const BigComplex& a) { return a.re * a.re + a.im * a.im; }

    friend BigComplex pow_ui(BigComplex base, unsigned long e) {
        BigComplex r = from_long(1, 0, base.prec());
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }
};

/// Scratch registers threaded through the dense hot loops so the inner
/// updates allocate nothing.
struct Scratch {
    BigFloat t1, t2;
    explicit Scratch(mpfr_prec_t prec) : t1(prec), t2(prec) {}
};

/// acc -= a*b, in place.
inline void fused_submul(BigComplex& acc, const BigComplex& a, const BigComplex& b, Scratch& s) {
    mpfr_mul(s.t1.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(s.t2.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_sub(s.t1.raw(), s.t1.raw(), s.t2.raw(), MPFR_RNDN);
    mpfr_sub(acc.re.raw(), acc.re.raw(), s.t1.raw(), MPFR_RNDN);
    mpfr_mul(s.t1.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_mul(s.t2.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_add(s.t1.raw(), s.t1.raw(), s.t2.raw(), MPFR_RNDN);
    mpfr_sub(acc.im.raw(), acc.im.raw(), s.t1.raw(), MPFR_RNDN);
}

/// acc += a*b, in place.
inline void fused_addmul(BigComplex& acc, const BigComplex& a, const BigComplex& b, Scratch& s) {
    mpfr_mul(s.t1.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(s.t2.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_sub(s.t1.raw(), s.t1.raw(), s.t2.raw(), MPFR_RNDN);
    mpfr_add(acc.re.raw(), acc.re.raw(), s.t1.raw(), MPFR_RNDN);
    mpfr_mul(s.t1.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_mul(s.t2.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_add(s.t1.raw(), s.t1.raw(), s.t2.raw(), MPFR_RNDN);
    mpfr_add(acc.im.raw(), acc.im.raw(), s.t1.raw(), MPFR_RNDN);
}

}  // namespace hpz
