#pragma once

#include <vector>

#include "hpz/bigcomplex.hpp"
#include "hpz/precision.hpp"

namespace hpz {

/// Dense polynomial over BigComplex, coefficients stored by ascending power.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigComplex> coeffs) : c_(std::move(coeffs)) {}

    static Polynomial zero(mpfr_prec_t prec) {
        return Polynomial({BigComplex(prec)});
    }

    const std::vector<BigComplex>& coeffs() const { return c_; }
    std::vector<BigComplex>& coeffs() { return c_; }
    std::size_t size() const { return c_.size(); }
    const BigComplex& operator[](std::size_t i) const { return c_[i]; }
    BigComplex& operator[](std::size_t i) { return c_[i]; }

    /// Highest index with |coeff| > tol; -1 for the (numerically) zero
    /// polynomial. Trailing near-zeros above the degree are flushed to exact
    /// zero so the stored vector satisfies the degree invariant.
    long trim(const BigFloat& tol) {
        long deg = -1;
        for (long i = static_cast<long>(c_.size()) - 1; i >= 0; --i) {
            if (mag1(c_[static_cast<std::size_t>(i)]) > tol) {
                deg = i;
                break;
            }
        }
        for (std::size_t i = static_cast<std::size_t>(deg + 1); i < c_.size(); ++i)
            c_[i] = BigComplex(c_[i].prec());
        deg_ = deg;
        return deg;
    }

    long degree() const { return deg_; }

    BigFloat max_coeff_mag() const {
        BigFloat m(prec());
        for (const auto& c : c_) m = max(m, mag1(c));
        return m;
    }

    mpfr_prec_t prec() const { return c_.empty() ? 128 : c_.front().prec(); }

    /// Horner evaluation at working precision.
    BigComplex eval(const BigComplex& z) const {
        if (c_.empty()) return BigComplex(z.prec());
        BigComplex acc = c_.back();
        Scratch s(std::max<mpfr_prec_t>(z.prec(), prec()));
        for (long i = static_cast<long>(c_.size()) - 2; i >= 0; --i) {
            BigComplex t = c_[static_cast<std::size_t>(i)];
            fused_addmul(t, acc, z, s);
            acc = std::move(t);
        }
        if (!acc.is_finite()) throw non_finite_error();
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial({BigComplex(prec())});
        std::vector<BigComplex> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            BigComplex t = c_[i];
            BigFloat k = BigFloat::from_long(static_cast<long>(i), c_[i].prec());
            t.re *= k;
            t.im *= k;
            d.push_back(std::move(t));
        }
        return Polynomial(std::move(d));
    }

private:
    std::vector<BigComplex> c_;
    long deg_ = -1;
};

inline BigComplex poly_eval(const Polynomial& p, const BigComplex& z) { return p.eval(z); }

}  // namespace hpz
