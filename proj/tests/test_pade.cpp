#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "hpz/analysis.hpp"
#include "hpz/pade.hpp"
#include "hpz/roots.hpp"
#include "oracle.hpp"

using namespace hpz;
using namespace hpz::testing;

namespace {

GermSeries lebesgue_germ(long length, long bits) {
    PrecisionContext ctx = PrecisionContext::make(bits);
    auto m = markov_moments(Rational(-1), Rational(1), MomentWeight::Lebesgue, length, ctx);
    std::vector<BigComplex> c;
    for (auto& x : m) c.push_back(BigComplex::from_real(std::move(x)));
    return GermSeries(Center::Infinity, 1, std::move(c));
}

// Rational Markov germ: sum_j w_j / (z - x_j).
GermSeries rational_markov_germ(const std::vector<std::pair<Rational, Rational>>& poles_weights,
                                long length, long bits) {
    std::vector<BigComplex> c(static_cast<std::size_t>(length), BigComplex(bits));
    for (long k = 0; k < length; ++k) {
        Rational acc(0);
        for (const auto& [x, w] : poles_weights) acc += w * pow_rational(x, k);
        c[static_cast<std::size_t>(k)] = BigComplex::from_rational(acc, bits);
    }
    return GermSeries(Center::Infinity, 1, std::move(c));
}

}  // namespace

TEST_CASE("[1/1] of the Lebesgue transform is 2/z") {
    const long bits = 256;
    PrecisionContext ctx = PrecisionContext::make(bits);
    PadePair p = pade_solve_from_germ(lebesgue_germ(pade_required_length(1), bits), 1, ctx);
    // (p0, p1) proportional to (-2, z)
    CHECK(mag1(p.p0[1]) < ctx.zero_tol);
    CHECK(mag1(p.p1[0]) < ctx.zero_tol);
    BigComplex ratio = p.p0[0] / p.p1[1];
    CHECK(close_abs(ratio, BigComplex::from_long(-2, 0, bits), ctx.zero_tol));
}

TEST_CASE("rational functions are reproduced exactly") {
    const long bits = 384;
    PrecisionContext ctx = PrecisionContext::make(bits);
    // f = 1/(z-3) + 2/(z+1), denominator degree 2
    std::vector<std::pair<Rational, Rational>> pw{{Rational(3), Rational(1)},
                                                  {Rational(-1), Rational(2)}};
    const long n = 2;
    PadePair p = pade_solve_from_germ(rational_markov_germ(pw, pade_required_length(n), bits), n, ctx);
    for (const auto& c : p.remainder_coeffs) CHECK(mag1(c) < ctx.zero_tol);
    BigComplex z = bc(0.5, 2.0, bits);
    BigComplex f = BigComplex::from_long(1, 0, bits) / (z - BigComplex::from_long(3, 0, bits)) +
                   BigComplex::from_long(2, 0, bits) / (z + BigComplex::from_long(1, 0, bits));
    CHECK(pade_error_probe(p, z, f, ctx) < ctx.zero_tol);

    // n above the denominator degree leaves a kernel of dimension > 1
    CHECK_THROWS_AS(
        pade_solve_from_germ(rational_markov_germ(pw, pade_required_length(4), bits), 4, ctx),
        non_generic_error);
}

TEST_CASE("denominator zeros of the arcsine transform are Chebyshev roots") {
    const long bits = 1024;
    PrecisionContext ctx = PrecisionContext::make(bits);
    const long n = 16;
    PadePair p = pade_solve(spec_inv_sqrt(), n, ctx);
    ZeroSet zs = find_roots(p.p1, ctx, "poles");
    REQUIRE(zs.roots.size() == 16);
    auto expect = oracle::chebyshev_roots(16, bits);
    std::vector<BigFloat> got;
    for (const auto& r : zs.roots) {
        CHECK(abs(r.im) < bfs("1e-20", bits));
        got.push_back(r.re);
    }
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(close_abs(got[i], expect[i], bfs("1e-20", bits)));
}

TEST_CASE("error probe rate matches the mapping function") {
    // f = 1/sqrt(z^2-1) at z=2: consecutive error ratio tends to phi(2)^2.
    const long n0 = 20;
    BigFloat e20(512), e21(512);
    for (long n : {n0, n0 + 1}) {
        PrecisionContext ctx = PrecisionContext::for_degree(n);
        PadePair p = pade_solve(spec_inv_sqrt(), n, ctx);
        BigComplex z = BigComplex::from_long(2, 0, ctx.bits);
        BigComplex f = BigComplex::from_real(BigFloat::from_long(1, ctx.bits) /
                                             sqrt(BigFloat::from_long(3, ctx.bits)));
        BigFloat err = pade_error_probe(p, z, f, ctx);
        if (n == n0) e20 = err; else e21 = err;
    }
    double ratio = (e20 / e21).to_double();
    double phi2 = (2.0 + std::sqrt(3.0)) * (2.0 + std::sqrt(3.0));
    CHECK(std::abs(ratio - phi2) / phi2 < 0.02);
}

TEST_CASE("probe errors at conjugate points coincide") {
    const long n = 8, bits = 512;
    PrecisionContext ctx = PrecisionContext::make(bits);
    PadePair p = pade_solve(spec_inv_sqrt(), n, ctx);
    auto fval = [&](const BigComplex& z) {
        BigComplex w = z * z - BigComplex::from_long(1, 0, bits);
        BigFloat r = abs(w), th = atan2(w.im, w.re);
        BigFloat half = BigFloat::from_double(0.5, bits);
        BigComplex sq{sqrt(r) * cos(th * half), sqrt(r) * sin(th * half)};
        return BigComplex::from_long(1, 0, bits) / sq;
    };
    BigComplex zp = bc(0, 3, bits), zm = bc(0, -3, bits);
    BigFloat ep = pade_error_probe(p, zp, fval(zp), ctx);
    BigFloat em = pade_error_probe(p, zm, fval(zm), ctx);
    CHECK(close_abs(ep, em, ulp_scale(bits, 64, ep)));
}

TEST_CASE("uniqueness of the ratio across normalizations") {
    const long n = 8;
    PrecisionContext c1 = PrecisionContext::make(512);
    PrecisionContext c2 = PrecisionContext::make(768);
    PadePair a = pade_solve(spec_inv_sqrt(), n, c1);
    PadePair b = pade_solve(spec_inv_sqrt(), n, c2);
    // p0 * p1~ - p0~ * p1 == 0: compare cross coefficient convolutions
    const long bits = 512;
    Scratch s(bits);
    for (long k = 0; k <= 2 * n; ++k) {
        BigComplex acc(bits);
        for (long i = 0; i <= k && i <= n; ++i) {
            long j = k - i;
            if (j > n) continue;
            fused_addmul(acc, a.p0[static_cast<std::size_t>(i)], b.p1[static_cast<std::size_t>(j)], s);
            fused_submul(acc, b.p0[static_cast<std::size_t>(j)], a.p1[static_cast<std::size_t>(i)], s);
        }
        CHECK(mag1(acc) < c1.zero_tol);
    }
}

TEST_CASE("Markov reality: denominator roots are real, simple, in the hull") {
    const long n = 24;
    PrecisionContext ctx = PrecisionContext::for_degree(n);
    PadePair p = pade_solve(spec_inv_sqrt(), n, ctx);
    ZeroSet zs = find_roots(p.p1, ctx, "poles");
    CHECK(zs.roots.size() == static_cast<std::size_t>(n));
    BigFloat one = BigFloat::from_long(1, ctx.bits);
    BigFloat tol = bfs("1e-30", ctx.bits);
    for (std::size_t i = 0; i < zs.roots.size(); ++i) {
        CHECK(abs(zs.roots[i].im) < tol);
        CHECK(zs.roots[i].re < one + tol);
        CHECK(-(one + tol) < zs.roots[i].re);
        CHECK(!zs.multiplicity_flags[i]);
    }
}

TEST_CASE("probe on a pole raises") {
    const long bits = 256;
    PrecisionContext ctx = PrecisionContext::make(bits);
    PadePair p = pade_solve(spec_inv_sqrt(), 4, ctx);
    ZeroSet zs = find_roots(p.p1, ctx, "poles");
    BigComplex f = BigComplex::from_long(0, 0, bits);
    CHECK_THROWS_AS(pade_error_probe(p, zs.roots.front(), f, ctx), std::domain_error);
}
