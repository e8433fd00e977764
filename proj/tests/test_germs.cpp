#include <doctest.h>

#include "helpers.hpp"
#include "hpz/germs.hpp"
#include "oracle.hpp"

using namespace hpz;
using namespace hpz::testing;

namespace {
constexpr long kBits = 256;
const PrecisionContext kCtx = PrecisionContext::make(kBits);
}

TEST_CASE("markov_moments lebesgue examples") {
    auto m = markov_moments(Rational(-1), Rational(1, 5), MomentWeight::Lebesgue, 2, kCtx);
    CHECK(m[0] == BigFloat::from_rational(Rational(6, 5), kBits));
    CHECK(m[1] == BigFloat::from_rational(Rational(-12, 25), kBits));  // (a^2-1)/2
    auto sym = markov_moments(Rational(-1), Rational(1), MomentWeight::Lebesgue, 2, kCtx);
    CHECK(sym[1].is_zero());
    CHECK_THROWS_AS(markov_moments(Rational(1), Rational(0), MomentWeight::Lebesgue, 2, kCtx),
                    std::invalid_argument);
    CHECK_THROWS_AS(markov_moments(Rational(0), Rational(1), MomentWeight::Lebesgue, 0, kCtx),
                    std::invalid_argument);
}

TEST_CASE("root-weight moments match the exact closed form") {
    for (bool hi : {true, false}) {
        for (Rational alpha : {Rational(1, 2), Rational(1, 3)}) {
            MomentWeight w = alpha == Rational(1, 2)
                                 ? (hi ? MomentWeight::RootHalfVanishHi : MomentWeight::RootHalfVanishLo)
                                 : (hi ? MomentWeight::RootThirdVanishHi : MomentWeight::RootThirdVanishLo);
            auto got = markov_moments(Rational(-1), Rational(1, 5), w, 12, kCtx);
            auto exact = oracle::root_moments_exact(Rational(-1), Rational(1, 5), alpha, hi, 12);
            for (std::size_t k = 0; k < got.size(); ++k) {
                BigFloat ref = BigFloat::from_rational(exact[k], kBits);
                CHECK(close_abs(got[k], ref, ulp_scale(kBits, 8, abs(ref))));
            }
        }
    }
}

TEST_CASE("germ_case1 examples") {
    GermSeries f1 = germ_case1(Rational(1, 5), 1, 8, kCtx);
    GermSeries f2 = germ_case1(Rational(1, 5), 2, 8, kCtx);
    CHECK(f1.offset() == 1);
    CHECK(f1.coeff(1) == BigComplex::from_rational(Rational(6, 5), kBits));
    CHECK(f2.coeff(1) == BigComplex::from_rational(Rational(6, 5), kBits));
    CHECK(f1.coeff(2) == BigComplex::from_rational(Rational(-12, 25), kBits));
    CHECK_THROWS_AS(germ_case1(Rational(3, 2), 1, 8, kCtx), std::invalid_argument);
}

TEST_CASE("germ_case2 and germ_case3 examples") {
    for (int member : {1, 2}) {
        GermSeries g = germ_case2(Rational(2, 5), member, 8, kCtx);
        CHECK(g.coeff(0) == BigComplex::from_long(1, 0, kBits));
    }
    GermSeries g1 = germ_case2(Rational(1, 5), 1, 8, kCtx);
    CHECK(close_abs(g1.coeff(1), BigComplex::from_rational(Rational(-3, 5), kBits),
                    ulp_scale(kBits, 4, BigFloat::from_long(1, kBits))));
    GermSeries h1 = germ_case3(Rational(1, 5), 1, 8, kCtx);
    CHECK(close_abs(h1.coeff(1), BigComplex::from_rational(Rational(-2, 5), kBits),
                    ulp_scale(kBits, 4, BigFloat::from_long(1, kBits))));
    CHECK_THROWS_AS(germ_case2(Rational(-7, 5), 1, 8, kCtx), std::invalid_argument);
}

TEST_CASE("moment route and binomial route agree (Cases 1-3)") {
    const Rational a(1, 5);
    // Case 1: the moment-route germ is the negated series of the printed log
    // formula log((z-a)/(z+1)) = log(1-aw) - log(1+w).
    GermSeries f1 = germ_case1(a, 1, 16, kCtx);
    for (long k = 1; k <= 16; ++k) {
        Rational logc = (-pow_rational(a, k) + pow_rational(Rational(-1), k)) / Rational(k);
        BigFloat ref = BigFloat::from_rational(-logc, kBits);
        CHECK(close_abs(f1.coeff(k).re, ref, ulp_scale(kBits, 8, abs(ref))));
        CHECK(f1.coeff(k).im.is_zero());
    }
    // Cases 2-3: binomial-route germ minus the constant 1 equals minus the
    // exact moment series.
    for (int cs : {2, 3}) {
        Rational alpha = cs == 2 ? Rational(1, 2) : Rational(1, 3);
        GermSeries g = cs == 2 ? germ_case2(a, 1, 17, kCtx) : germ_case3(a, 1, 17, kCtx);
        auto mu = oracle::root_moments_exact(Rational(-1), a, alpha, true, 16);
        for (long k = 0; k < 16; ++k) {
            BigFloat ref = -BigFloat::from_rational(mu[static_cast<std::size_t>(k)], kBits);
            CHECK(close_abs(g.coeff(k + 1).re, ref, ulp_scale(kBits, 8, abs(ref))));
        }
    }
}

TEST_CASE("squaring the Case 2 germ reproduces the rational function") {
    const Rational a(2, 5);
    long len = 20;
    GermSeries g = germ_case2(a, 1, len, kCtx);
    GermSeries sq = series_mul(g, g);
    // (z-a)/(z+1) = (1-aw)(1+w)^{-1}: coefficients 1, (-1)^k (1+a) for k >= 1.
    CHECK(close_abs(sq.coeff(0), BigComplex::from_long(1, 0, kBits), kCtx.zero_tol));
    for (long k = 1; k < len; ++k) {
        Rational ck = pow_rational(Rational(-1), k) * (Rational(1) + a);
        CHECK(close_abs(sq.coeff(k), BigComplex::from_rational(ck, kBits), kCtx.zero_tol));
    }
    GermSeries h = germ_case3(a, 1, len, kCtx);
    GermSeries cube = series_mul(series_mul(h, h), h);
    for (long k = 1; k < len; ++k) {
        Rational ck = pow_rational(Rational(-1), k) * (Rational(1) + a);
        CHECK(close_abs(cube.coeff(k), BigComplex::from_rational(ck, kBits), kCtx.zero_tol));
    }
}

TEST_CASE("Case 1 reflection: f1(-z) = -f2(z) coefficientwise") {
    const Rational a(1, 5);
    GermSeries f1 = germ_case1(a, 1, 12, kCtx);
    GermSeries f2 = germ_case1(a, 2, 12, kCtx);
    for (long k = 1; k <= 12; ++k) {
        // moment m_{k-1}(E2) = (-1)^{k-1} m_{k-1}(E1)
        BigFloat expect = (k % 2 == 1) ? f1.coeff(k).re : -f1.coeff(k).re;
        CHECK(f2.coeff(k).re == expect);
    }
}

TEST_CASE("germ_algebraic examples") {
    // Quarter-power ratio at the origin: constant term is the principal value
    // of (a1/a2)^(1/4).
    FunctionSpec r4 = spec_ratio4(BranchTag::Plus);
    GermSeries at0 = germ_algebraic(r4, Center::Origin, 8, kCtx);
    BigComplex a1 = BigComplex::from_strings("0.9", "-1.1", kBits);
    BigComplex a2 = BigComplex::from_strings("0.1", "0.2", kBits);
    BigComplex ratio = a1 / a2;
    BigFloat th = atan2(ratio.im, ratio.re) / BigFloat::from_long(4, kBits);
    BigFloat r = exp(log(abs(ratio)) / BigFloat::from_long(4, kBits));
    BigComplex expect{r * cos(th), r * sin(th)};
    CHECK(close_abs(at0.coeff(0), expect, ulp_scale(kBits, 32, abs(expect))));

    // Three-point cube-root reciprocal at infinity: leading term w^1 with
    // unit coefficient.
    GermSeries s3 = germ_algebraic(spec_stahl3(), Center::Infinity, 8, kCtx);
    CHECK(s3.offset() == 1);
    CHECK(close_abs(s3.coeff(1), BigComplex::from_long(1, 0, kBits),
                    ulp_scale(kBits, 8, BigFloat::from_long(1, kBits))));

    // Degenerate rational sanity input: exponent 1 ratio gives the exact
    // series of (z-2)/(z-3).
    FunctionSpec rat;
    rat.family = Family::TwoPointRatio;
    rat.branch_points = {{"2", "0"}, {"3", "0"}};
    rat.exponents = {Rational(1), Rational(-1)};
    GermSeries s = germ_algebraic(rat, Center::Infinity, 10, kCtx);
    CHECK(close_abs(s.coeff(0), BigComplex::from_long(1, 0, kBits), kCtx.zero_tol));
    for (long k = 1; k < 10; ++k) {
        // (1-2w)(1-3w)^{-1}: c_k = 3^k - 2*3^{k-1} = 3^{k-1}
        Rational ck = pow_rational(Rational(3), k - 1);
        CHECK(close_abs(s.coeff(k), BigComplex::from_rational(ck, kBits),
                        ulp_scale(kBits, 8, BigFloat::from_rational(ck, kBits))));
    }

    // Errors: center on a branch point; non-integer exponent sum at infinity.
    FunctionSpec bad = spec_ratio4(BranchTag::Plus);
    bad.branch_points[1] = {"0", "0"};
    CHECK_THROWS_AS(germ_algebraic(bad, Center::Origin, 4, kCtx), std::invalid_argument);
    FunctionSpec frac;
    frac.family = Family::AlgebraicProduct;
    frac.branch_points = {{"1", "0"}};
    frac.exponents = {Rational(1, 2)};
    CHECK_THROWS_AS(germ_algebraic(frac, Center::Infinity, 4, kCtx), std::invalid_argument);
}

TEST_CASE("buslaev mixed pair germs") {
    // f at the origin: ((1-2z)(2-z))^(-1/2), value 2^(-1/2) at 0.
    GermSeries f0 = germ_algebraic(spec_buslaev_origin(), Center::Origin, 8, kCtx);
    BigFloat isqrt2 = BigFloat::from_long(1, kBits) / sqrt(BigFloat::from_long(2, kBits));
    CHECK(close_abs(f0.coeff(0), BigComplex::from_real(isqrt2), ulp_scale(kBits, 16, isqrt2)));
    CHECK(f0.coeff(0).im.is_zero());

    // f at infinity: ((2z-1)(z-2))^(-1/2) + 1 -> constant 1 plus w/sqrt(2).
    GermSeries fi = germ_algebraic(spec_buslaev_infinity(), Center::Infinity, 8, kCtx);
    CHECK(fi.coeff(0) == BigComplex::from_long(1, 0, kBits));
    CHECK(close_abs(fi.coeff(1), BigComplex::from_real(isqrt2), ulp_scale(kBits, 16, isqrt2)));
}

TEST_CASE("FunctionSpec JSON round trip") {
    FunctionSpec s = spec_ratio4(BranchTag::Minus);
    s.a = Rational(7, 9);
    s.member = 2;
    s.add_constant = Rational(1);
    s.scale_base = Rational(2);
    s.scale_exp = Rational(-1, 2);
    FunctionSpec t = FunctionSpec::from_json(s.to_json());
    CHECK(t.family == s.family);
    CHECK(t.a == s.a);
    CHECK(t.member == s.member);
    CHECK(t.branch_points == s.branch_points);
    CHECK(t.exponents == s.exponents);
    CHECK(t.branch_tag == s.branch_tag);
    CHECK(t.scale_base == s.scale_base);
    CHECK(t.scale_exp == s.scale_exp);
    CHECK(t.add_constant == s.add_constant);
}
