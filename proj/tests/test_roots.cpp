#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "hpz/roots.hpp"
#include "oracle.hpp"

using namespace hpz;
using namespace hpz::testing;

namespace {
constexpr long kBits = 256;
const PrecisionContext kCtx = PrecisionContext::make(kBits);

Polynomial from_doubles(const std::vector<std::pair<double, double>>& cs, long bits) {
    std::vector<BigComplex> v;
    for (const auto& [re, im] : cs) v.push_back(bc(re, im, bits));
    return Polynomial(std::move(v));
}

bool matches_multiset(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b,
                      const BigFloat& tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& z : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            if (!(abs(z - b[j]) > tol)) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("z^2+1 roots") {
    Polynomial p = from_doubles({{1, 0}, {0, 0}, {1, 0}}, kBits);
    ZeroSet zs = find_roots(p, kCtx);
    REQUIRE(zs.roots.size() == 2);
    BigFloat tol = BigFloat::pow2(-kBits / 2, kBits);
    std::vector<BigComplex> expect{BigComplex::i_unit(kBits), -BigComplex::i_unit(kBits)};
    CHECK(matches_multiset(zs.roots, expect, tol));
    for (const auto& r : zs.residuals) CHECK(r < BigFloat::pow2(-kBits / 3, kBits));
}

TEST_CASE("Chebyshev T8 roots to 1e-30 at 256 bits") {
    Polynomial t8 = oracle::chebyshev_t(8, kBits);
    ZeroSet zs = find_roots(t8, kCtx);
    REQUIRE(zs.roots.size() == 8);
    auto expect = oracle::chebyshev_roots(8, kBits);
    std::vector<BigFloat> got;
    for (const auto& r : zs.roots) {
        CHECK(abs(r.im) < bfs("1e-30", kBits));
        got.push_back(r.re);
    }
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    for (std::size_t i = 0; i < 8; ++i) CHECK(close_abs(got[i], expect[i], bfs("1e-30", kBits)));
}

TEST_CASE("triple root clusters carry multiplicity flags") {
    // (z-1)^3 = z^3 - 3z^2 + 3z - 1
    Polynomial p = from_doubles({{-1, 0}, {3, 0}, {-3, 0}, {1, 0}}, kBits);
    ZeroSet zs = find_roots(p, kCtx);
    REQUIRE(zs.roots.size() == 3);
    BigFloat cluster_eps = BigFloat::pow2(-kBits / 8, kBits);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(abs(zs.roots[i] - BigComplex::from_long(1, 0, kBits)) < cluster_eps);
        CHECK(zs.multiplicity_flags[i]);
    }
}

TEST_CASE("Vieta sums and products") {
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> u(-2, 2);
    std::vector<std::pair<double, double>> cs;
    for (int i = 0; i < 13; ++i) cs.push_back({u(rng), 0.0});
    if (std::abs(cs.back().first) < 0.5) cs.back().first = 1.0;
    if (std::abs(cs.front().first) < 0.5) cs.front().first = 1.0;  // keep the origin clear
    Polynomial p = from_doubles(cs, kBits);
    ZeroSet zs = find_roots(p, kCtx);
    const long d = 12;
    REQUIRE(zs.roots.size() == static_cast<std::size_t>(d));
    BigComplex sum(kBits), prod = BigComplex::from_long(1, 0, kBits);
    BigFloat maxmag(kBits);
    for (const auto& r : zs.roots) {
        sum += r;
        prod = prod * r;
        maxmag = max(maxmag, abs(r));
    }
    BigComplex lead = p[12], c11 = p[11], c0 = p[0];
    BigFloat tol = BigFloat::pow2(-kBits / 2, kBits) * BigFloat::from_long(d, kBits) *
                   max(BigFloat::from_long(1, kBits), pow_si(maxmag, d));
    CHECK(close_abs(sum, -(c11 / lead), tol));
    BigComplex vieta0 = (d % 2 == 0) ? c0 / lead : -(c0 / lead);
    CHECK(close_abs(prod, vieta0, tol));
}

TEST_CASE("real coefficients give a conjugation-closed multiset") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<std::pair<double, double>> cs;
    for (int i = 0; i < 10; ++i) cs.push_back({u(rng), 0.0});
    cs.back().first = 1.0;
    Polynomial p = from_doubles(cs, kBits);
    ZeroSet zs = find_roots(p, kCtx);
    std::vector<BigComplex> conjs;
    for (const auto& r : zs.roots) conjs.push_back(conj(r));
    CHECK(matches_multiset(zs.roots, conjs, BigFloat::pow2(-kBits / 3, kBits)));
}

TEST_CASE("seed only permutes the root multiset") {
    Polynomial t7 = oracle::chebyshev_t(7, kBits);
    ZeroSet a = find_roots(t7, PrecisionContext::make(kBits, 1));
    ZeroSet b = find_roots(t7, PrecisionContext::make(kBits, 42));
    CHECK(matches_multiset(a.roots, b.roots, BigFloat::pow2(-kBits / 3, kBits)));
}

TEST_CASE("trailing strips record origin zeros") {
    // z^4 - 2 z^3 = z^3 (z - 2)
    Polynomial p = from_doubles({{0, 0}, {0, 0}, {0, 0}, {-2, 0}, {1, 0}}, kBits);
    ZeroSet zs = find_roots(p, kCtx);
    REQUIRE(zs.roots.size() == 4);
    long at_origin = 0;
    bool has_two = false;
    for (const auto& r : zs.roots) {
        if (r.is_zero()) ++at_origin;
        if (close_abs(r, BigComplex::from_long(2, 0, kBits), BigFloat::pow2(-kBits / 2, kBits)))
            has_two = true;
    }
    CHECK(at_origin == 3);
    CHECK(has_two);
}

TEST_CASE("strongly graded root moduli converge from polygon circles") {
    const long bits = 512;
    PrecisionContext ctx = PrecisionContext::make(bits);
    // p = prod (z - 2^(j-12)), j = 1..24: moduli span 2^-11 .. 2^12
    std::vector<BigComplex> c{BigComplex::from_long(1, 0, bits)};
    for (long j = 1; j <= 24; ++j) {
        BigComplex r{BigFloat::pow2(j - 12, bits), BigFloat(bits)};
        std::vector<BigComplex> nc(c.size() + 1, BigComplex(bits));
        for (std::size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];
            BigComplex t = c[i] * r;
            nc[i] -= t;
        }
        c = std::move(nc);
    }
    ZeroSet zs = find_roots(Polynomial(std::move(c)), ctx, "graded");
    REQUIRE(zs.roots.size() == 24);
    long matched = 0;
    for (long j = 1; j <= 24; ++j) {
        BigFloat target = BigFloat::pow2(j - 12, bits);
        BigFloat tol = target * BigFloat::pow2(-100, bits);
        for (const auto& r : zs.roots)
            if (abs(r.re - target) < tol && abs(r.im) < tol) {
                ++matched;
                break;
            }
    }
    CHECK(matched == 24);
}

TEST_CASE("non-convergence error carries the worst residual") {
    Polynomial t9 = oracle::chebyshev_t(9, kBits);
    RootOptions opts;
    opts.max_iter = 1;
    CHECK_THROWS_AS(find_roots(t9, kCtx, "", opts), root_convergence_error);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(find_roots(Polynomial({BigComplex::from_long(3, 0, kBits)}), kCtx),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_roots(Polynomial::zero(kBits), kCtx), std::invalid_argument);
}
