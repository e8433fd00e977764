#include "hpz/series.hpp"

#include <algorithm>

namespace hpz {

GermSeries GermSeries::plus_constant(const BigComplex& a) const {
    if (offset_ <= 0) {
        GermSeries r = *this;
        r.at(0) = r.coeff(0) + a;
        return r;
    }
    // Window starts above exponent 0: prepend explicit zeros down to 0.
    std::vector<BigComplex> c;
    c.reserve(static_cast<std::size_t>(top() + 1));
    c.push_back(a);
    for (long k = 1; k < offset_; ++k) c.push_back(BigComplex(prec()));
    for (const auto& x : c_) c.push_back(x);
    return GermSeries(center_, 0, std::move(c));
}

GermSeries series_add(const GermSeries& a, const GermSeries& b) {
    if (a.center() != b.center()) throw center_mismatch_error();
    long lo = std::min(a.offset(), b.offset());
    long hi = std::min(a.top(), b.top());
    if (hi < lo) throw std::invalid_argument("series_add: empty overlap window");
    std::vector<BigComplex> c;
    c.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long k = lo; k <= hi; ++k) c.push_back(a.coeff(k) + b.coeff(k));
    return GermSeries(a.center(), lo, std::move(c));
}

GermSeries series_sub(const GermSeries& a, const GermSeries& b) {
    return series_add(a, b.negated());
}

GermSeries series_mul(const GermSeries& a, const GermSeries& b) {
    if (a.center() != b.center()) throw center_mismatch_error();
    long len = std::min(a.length(), b.length());
    long lo = a.offset() + b.offset();
    mpfr_prec_t prec = std::max(a.prec(), b.prec());
    std::vector<BigComplex> c(static_cast<std::size_t>(len), BigComplex(prec));
    Scratch s(prec);
    for (long t = 0; t < len; ++t) {
        BigComplex& acc = c[static_cast<std::size_t>(t)];
        for (long i = 0; i <= t; ++i)
            fused_addmul(acc, a.coeff(a.offset() + i), b.coeff(b.offset() + t - i), s);
    }
    return GermSeries(a.center(), lo, std::move(c));
}

GermSeries binomial_series_exact(Center center, const Rational& c, long j, const Rational& alpha,
                                 long length, mpfr_prec_t prec) {
    std::vector<BigComplex> out(static_cast<std::size_t>(length), BigComplex(prec));
    Rational term(1);  // C(alpha,k) * c^k, exact
    for (long k = 0; j * k < length; ++k) {
        out[static_cast<std::size_t>(j * k)] = BigComplex::from_rational(term, prec);
        term *= (alpha - Rational(k)) / Rational(k + 1);
        term *= c;
    }
    return GermSeries(center, 0, std::move(out));
}

namespace {

// h = u - 1 is a single monomial c*w^j? Returns j (>=1) or 0.
long monomial_tail(const GermSeries& u) {
    long j = 0;
    for (long k = 1; k <= u.top(); ++k) {
        if (!u.coeff(k).is_zero()) {
            if (j != 0) return 0;
            j = k;
        }
    }
    return j;
}

}  // namespace

GermSeries series_binomial_pow(const GermSeries& u, const Rational& alpha) {
    if (u.offset() > 0) throw std::invalid_argument("series_binomial_pow: leading term must be 1");
    const BigComplex& u0 = u.coeff(0);
    mpfr_prec_t prec = u.prec();
    BigComplex one = BigComplex::from_long(1, 0, prec);
    if (!(u0 == one)) throw std::invalid_argument("series_binomial_pow: leading coefficient != 1");
    long len = u.top() + 1;

    if (long j = monomial_tail(u); j != 0) {
        // (1 + c*w^j)^alpha, exact binomial coefficients, c complex.
        const BigComplex& c = u.coeff(j);
        std::vector<BigComplex> out(static_cast<std::size_t>(len), BigComplex(prec));
        for (long k = 0; j * k < len; ++k) {
            Rational bk = binomial(alpha, static_cast<unsigned long>(k));
            BigComplex ck = pow_ui(c, static_cast<unsigned long>(k));
            BigFloat b = BigFloat::from_rational(bk, prec);
            ck.re *= b;
            ck.im *= b;
            out[static_cast<std::size_t>(j * k)] = std::move(ck);
        }
        return GermSeries(u.center(), 0, std::move(out));
    }

    // General tail: y = u^alpha via u*y' = alpha*u'*y, i.e.
    //   y_m = (1/m) * sum_{j=1..m} ((alpha+1) j - m) u_j y_{m-j}.
    std::vector<BigComplex> y(static_cast<std::size_t>(len), BigComplex(prec));
    y[0] = one;
    BigFloat af = BigFloat::from_rational(alpha, prec);
    Scratch s(prec);
    for (long m = 1; m < len; ++m) {
        BigComplex acc(prec);
        for (long j = 1; j <= m; ++j) {
            const BigComplex& uj = u.coeff(j);
            if (uj.is_zero()) continue;
            // w = ((alpha+1)*j - m), real
            BigFloat w = (af + BigFloat::from_long(1, prec)) * BigFloat::from_long(j, prec) -
                         BigFloat::from_long(m, prec);
            BigComplex t = uj;
            t.re *= w;
            t.im *= w;
            fused_addmul(acc, t, y[static_cast<std::size_t>(m - j)], s);
        }
        BigFloat inv_m = BigFloat::from_long(1, prec) / BigFloat::from_long(m, prec);
        acc.re *= inv_m;
        acc.im *= inv_m;
        y[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return GermSeries(u.center(), 0, std::move(y));
}

}  // namespace hpz
