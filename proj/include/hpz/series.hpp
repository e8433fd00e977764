#pragma once

#include <stdexcept>
#include <vector>

#include "hpz/bigcomplex.hpp"
#include "hpz/precision.hpp"
#include "hpz/rational.hpp"

namespace hpz {

struct center_mismatch_error : std::runtime_error {
    center_mismatch_error() : std::runtime_error("series centers differ") {}
};

enum class Center { Infinity, Origin };

/// Truncated expansion of an analytic germ in the local variable w
/// (w = 1/z at infinity, w = z at the origin):
///
///     sum over k in [offset, offset+length) of coeffs[k-offset] * w^k.
///
/// A Markov-type germ at infinity has offset 1 and coeff(k+1) equal to the
/// k-th moment of its measure.
class GermSeries {
public:
    GermSeries(Center center, long offset, std::vector<BigComplex> coeffs)
        : center_(center),
          offset_(offset),
          c_(std::move(coeffs)),
          zero_(c_.empty() ? 128 : c_.front().prec()) {}

    static GermSeries zero(Center center, long length, mpfr_prec_t prec) {
        return GermSeries(center, 0, std::vector<BigComplex>(static_cast<std::size_t>(length), BigComplex(prec)));
    }
    static GermSeries constant_one(Center center, long length, mpfr_prec_t prec) {
        GermSeries s = zero(center, length, prec);
        s.c_[0] = BigComplex::from_long(1, 0, prec);
        return s;
    }

    Center center() const { return center_; }
    long offset() const { return offset_; }
    long length() const { return static_cast<long>(c_.size()); }
    /// Highest exponent with a stored coefficient.
    long top() const { return offset_ + length() - 1; }

    /// Coefficient of w^k; an exact zero at the series precision outside the
    /// stored window.
    const BigComplex& coeff(long k) const {
        if (k < offset_ || k > top()) return zero_;
        return c_[static_cast<std::size_t>(k - offset_)];
    }
    BigComplex& at(long k) { return c_[static_cast<std::size_t>(k - offset_)]; }
    const std::vector<BigComplex>& coeffs() const { return c_; }

    mpfr_prec_t prec() const { return c_.empty() ? 128 : c_.front().prec(); }

    GermSeries scaled(const BigComplex& f) const {
        GermSeries r = *this;
        for (auto& c : r.c_) c = c * f;
        return r;
    }
    GermSeries negated() const {
        GermSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    /// Adds a constant term (exponent 0), extending the window if needed.
    GermSeries plus_constant(const BigComplex& a) const;

    BigFloat max_coeff_mag() const {
        BigFloat m(prec());
        for (const auto& c : c_) m = max(m, mag1(c));
        return m;
    }

private:
    Center center_;
    long offset_;
    std::vector<BigComplex> c_;
    BigComplex zero_;
};

/// Coefficientwise sum; window = intersection of the two valid windows.
GermSeries series_add(const GermSeries& a, const GermSeries& b);
GermSeries series_sub(const GermSeries& a, const GermSeries& b);

/// Cauchy product truncated to min(length a, length b) terms past the summed
/// offsets (coefficients beyond that would need unknown tails).
GermSeries series_mul(const GermSeries& a, const GermSeries& b);

/// (1+h)^alpha for u = 1+h with u.coeff(0) == 1, alpha rational, branch fixed
/// by (1+h)^alpha -> 1 at the center. For the binomial case h = c*w^j the
/// expansion is sum_k C(alpha,k) c^k w^(jk) with C(alpha,k) exact in rational
/// arithmetic and one rounding per coefficient; a general tail falls back to
/// the logarithmic-derivative recurrence.
GermSeries series_binomial_pow(const GermSeries& u, const Rational& alpha);

/// Binomial series (1 + c*w^j)^alpha with exact rational c: every coefficient
/// C(alpha,k)*c^k is an exact rational rounded once.
GermSeries binomial_series_exact(Center center, const Rational& c, long j, const Rational& alpha,
                                 long length, mpfr_prec_t prec);

}  // namespace hpz
