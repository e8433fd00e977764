#pragma once

#include <random>
#include <vector>

#include "hpz/bigcomplex.hpp"
#include "hpz/precision.hpp"
#include "hpz/series.hpp"

namespace hpz::testing {

inline BigFloat ulp_scale(long bits, long k, const BigFloat& scale) {
    return BigFloat::pow2(-bits, bits) * BigFloat::from_long(k, bits) *
           max(scale, BigFloat::from_long(1, bits));
}

inline bool close_abs(const BigFloat& a, const BigFloat& b, const BigFloat& tol) {
    return !(abs(a - b) > tol);
}

inline bool close_abs(const BigComplex& a, const BigComplex& b, const BigFloat& tol) {
    return !(abs(a - b) > tol);
}

inline BigFloat bf(double x, long bits) { return BigFloat::from_double(x, bits); }
inline BigFloat bfs(const char* s, long bits) { return BigFloat::from_string(s, bits); }
inline BigComplex bc(double re, double im, long bits) {
    return {BigFloat::from_double(re, bits), BigFloat::from_double(im, bits)};
}

inline GermSeries random_series(std::mt19937_64& rng, long length, long bits, double amp = 1.0,
                                long offset = 0) {
    std::uniform_real_distribution<double> u(-amp, amp);
    std::vector<BigComplex> c;
    c.reserve(static_cast<std::size_t>(length));
    for (long i = 0; i < length; ++i) c.push_back(bc(u(rng), u(rng), bits));
    return GermSeries(Center::Infinity, offset, std::move(c));
}

}  // namespace hpz::testing
