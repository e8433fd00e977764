#include <doctest.h>

#include "helpers.hpp"
#include "hpz/hermite_pade.hpp"
#include "oracle.hpp"

using namespace hpz;
using namespace hpz::testing;

namespace {
constexpr long kBits = 512;
const PrecisionContext kCtx = PrecisionContext::make(kBits);

// Independent recomputation path: treat each q_j as a w-series (polynomials
// in z have nonpositive w-exponents) and combine with the germs through the
// generic series ops.
std::vector<BigComplex> window_coeffs_via_series(const HPTriple& t, const GermSeries& s1,
                                                 const GermSeries& s2) {
    long n = t.n;
    long len = s1.length() + n;
    auto poly_as_series = [&](const Polynomial& p) {
        std::vector<BigComplex> c(static_cast<std::size_t>(len), BigComplex(kBits));
        for (std::size_t i = 0; i < p.size(); ++i)
            c[static_cast<std::size_t>(n - static_cast<long>(i))] = p[i];
        return GermSeries(Center::Infinity, -n, std::move(c));
    };
    GermSeries q0 = poly_as_series(t.q0);
    GermSeries r = series_add(series_add(q0, series_mul(poly_as_series(t.q1), s1)),
                              series_mul(poly_as_series(t.q2), s2));
    std::vector<BigComplex> out;
    for (long e = -n; e <= 2 * n + 1; ++e) out.push_back(r.coeff(e));
    return out;
}
}  // namespace

TEST_CASE("hp_build_matrix small examples") {
    const Rational a(1, 5);
    GermSeries s1 = germ_case1(a, 1, hp_required_length(1), kCtx);
    GermSeries s2 = germ_case1(a, 2, hp_required_length(1), kCtx);

    DenseMatrix m0 = hp_build_matrix(s1, s2, 0);
    CHECK(m0.rows() == 2);
    CHECK(m0.cols() == 3);
    BigComplex one = BigComplex::from_long(1, 0, kBits);
    BigComplex m0c = BigComplex::from_rational(Rational(6, 5), kBits);
    CHECK(m0.at(0, 0) == one);
    CHECK(m0.at(0, 1).is_zero());
    CHECK(m0.at(0, 2).is_zero());
    CHECK(m0.at(1, 0).is_zero());
    CHECK(m0.at(1, 1) == m0c);
    CHECK(m0.at(1, 2) == m0c);

    // n=1: rows for z^1, z^0, z^-1, z^-2, z^-3; the z^-2 row carries
    // m1 in the q_{1,0}/q_{2,0} columns and m2 in the q_{1,1}/q_{2,1} ones.
    DenseMatrix m1 = hp_build_matrix(s1, s2, 1);
    CHECK(m1.rows() == 5);
    CHECK(m1.cols() == 6);
    BigComplex mom1 = BigComplex::from_rational(Rational(-12, 25), kBits);
    BigComplex mom2 = BigComplex::from_rational(Rational(42, 125), kBits);  // (a^3+1)/3
    CHECK(m1.at(3, 0).is_zero());
    CHECK(m1.at(3, 1).is_zero());
    CHECK(m1.at(3, 2) == mom1);
    CHECK(m1.at(3, 3) == mom2);
    CHECK(m1.at(3, 4) == -mom1);  // E2 moment of odd index flips sign
    CHECK(m1.at(3, 5) == mom2);

    CHECK_THROWS_AS(hp_build_matrix(germ_case1(a, 1, 3, kCtx), germ_case1(a, 2, 3, kCtx), 4),
                    std::invalid_argument);
}

TEST_CASE("degenerate zero germs give a non-generic kernel") {
    GermSeries z1 = GermSeries::zero(Center::Infinity, hp_required_length(0), kBits);
    DenseMatrix m = hp_build_matrix(z1, z1, 0);
    CHECK_THROWS_AS(nullvector(m, kCtx), non_generic_error);
}

TEST_CASE("n=0 triple is (0, 1, -1) for all three cases") {
    const Rational a(1, 5);
    for (int cs : {1, 2, 3}) {
        HPTriple t = hp_solve(spec_case(cs, a, 1), spec_case(cs, a, 2), 0, kCtx);
        CHECK(mag1(t.q0[0]) < kCtx.zero_tol);
        CHECK(close_abs(t.q1[0], BigComplex::from_long(1, 0, kBits), kCtx.zero_tol));
        CHECK(close_abs(t.q2[0], BigComplex::from_long(-1, 0, kBits), kCtx.zero_tol));
    }
}

TEST_CASE("hp_solve matches the exact oracle (log case)") {
    const Rational a(1, 5);
    for (long n : {1L, 3L, 8L}) {
        PrecisionContext ctx = PrecisionContext::for_degree(n);
        HPTriple t = hp_solve(spec_case(1, a, 1), spec_case(1, a, 2), n, ctx);
        oracle::ExactTriple et = oracle::exact_hp(a, n);
        std::vector<Rational> flat;
        for (const auto& blk : {et.q0, et.q1, et.q2})
            for (const auto& q : blk) flat.push_back(q);
        std::vector<BigComplex> got;
        for (const auto& p : {t.q0, t.q1, t.q2})
            for (const auto& c : p.coeffs()) got.push_back(c);
        // max-magnitude normalization index of the float solution
        std::size_t idx = 0;
        BigFloat bm(ctx.bits);
        for (std::size_t i = 0; i < got.size(); ++i)
            if (abs2(got[i]) > bm) {
                bm = abs2(got[i]);
                idx = i;
            }
        BigFloat tol = BigFloat::pow2(-ctx.bits / 3, ctx.bits);
        for (std::size_t i = 0; i < got.size(); ++i) {
            BigFloat ref = BigFloat::from_rational(flat[i] / flat[idx], ctx.bits);
            CHECK(close_abs(got[i].re, ref, tol));
            CHECK(abs(got[i].im) < tol);
        }
    }
}

TEST_CASE("contact order and non-degeneracy") {
    const long n = 12;
    PrecisionContext ctx = PrecisionContext::for_degree(n);
    for (int cs : {1, 2}) {
        FunctionSpec f1 = spec_case(cs, Rational(1, 5), 1);
        FunctionSpec f2 = spec_case(cs, Rational(1, 5), 2);
        HPTriple t = hp_solve(f1, f2, n, ctx);
        GermSeries s1 = resolve_germ(f1, Center::Infinity, hp_required_length(n), ctx);
        GermSeries s2 = resolve_germ(f2, Center::Infinity, hp_required_length(n), ctx);
        auto window = window_coeffs_via_series(t, s1, s2);
        BigFloat scale = max(s1.max_coeff_mag(), s2.max_coeff_mag()) + BigFloat::from_long(1, ctx.bits);
        for (const auto& c : window) CHECK(mag1(c) < ctx.zero_tol * scale);
        // non-degeneracy just past the window
        CHECK(mag1(t.remainder_coeffs[0]) > sqrt(ctx.zero_tol));
        // realness of a real-parameter family
        for (const auto& p : {t.q0, t.q1, t.q2})
            for (const auto& c : p.coeffs()) CHECK(abs(c.im) < ctx.zero_tol);
    }
}

TEST_CASE("Case 1 reflection symmetry of the exact kernel") {
    // f1(-z) = -f2(z) plus kernel uniqueness forces q1(z) = c * q2(-z).
    oracle::ExactTriple t = oracle::exact_hp(Rational(2, 5), 6);
    Rational c(0);
    for (std::size_t i = 0; i < t.q1.size(); ++i) {
        Rational flip = (i % 2 == 0) ? t.q2[i] : -t.q2[i];
        if (c == 0 && flip != 0) c = t.q1[i] / flip;
    }
    REQUIRE(c != 0);
    for (std::size_t i = 0; i < t.q1.size(); ++i) {
        Rational flip = (i % 2 == 0) ? t.q2[i] : -t.q2[i];
        CHECK(t.q1[i] == c * flip);
    }
}

TEST_CASE("measure scaling covariance") {
    const long n = 6;
    PrecisionContext ctx = PrecisionContext::for_degree(n);
    const Rational a(1, 5);
    long len = hp_required_length(n);
    GermSeries s1 = germ_case1(a, 1, len, ctx);
    GermSeries s2 = germ_case1(a, 2, len, ctx);
    HPTriple base = hp_solve_from_germs(s1, s2, n, ctx);
    BigComplex five = BigComplex::from_long(5, 0, ctx.bits);
    HPTriple scaled = hp_solve_from_germs(s1.scaled(five), s2.scaled(five), n, ctx);

    // kernel covariance: (q0, q1/5, q2/5) up to one overall constant
    BigComplex lambda;
    bool have = false;
    BigFloat tol = BigFloat::pow2(-ctx.bits / 3, ctx.bits);
    auto check_block = [&](const Polynomial& b, const Polynomial& s, long scale_pow) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            BigComplex expect = b[i];
            if (scale_pow == 1) expect = expect / five;
            if (!have && mag1(expect) > BigFloat::from_double(0.25, ctx.bits)) {
                lambda = s[i] / expect;
                have = true;
            }
        }
    };
    check_block(base.q0, scaled.q0, 0);
    check_block(base.q1, scaled.q1, 1);
    REQUIRE(have);
    auto verify_block = [&](const Polynomial& b, const Polynomial& s, long scale_pow) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            BigComplex expect = b[i];
            if (scale_pow == 1) expect = expect / five;
            CHECK(close_abs(s[i], expect * lambda, tol));
        }
    };
    verify_block(base.q0, scaled.q0, 0);
    verify_block(base.q1, scaled.q1, 1);
    verify_block(base.q2, scaled.q2, 1);
}
