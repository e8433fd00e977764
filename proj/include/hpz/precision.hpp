#pragma once

#include <algorithm>
#include <stdexcept>

#include "hpz/bigfloat.hpp"

namespace hpz {

/// Working precision and tolerance policy that every solver threads through.
struct PrecisionContext {
    long bits;          // binary mantissa precision, >= 128
    BigFloat zero_tol;  // residual magnitudes below this count as zero
    unsigned long seed; // determinism for perturbed starting points

    static PrecisionContext make(long bits, unsigned long seed = 0) {
        if (bits < 128) throw std::invalid_argument("PrecisionContext: bits must be >= 128");
        PrecisionContext ctx{bits, BigFloat::pow2(-(bits / 4), bits), seed};
        return ctx;
    }

    /// Default policy for a degree-n problem: Hankel-type systems lose O(n)
    /// digits, so scale the mantissa with n.
    static long default_bits(long n) { return std::max(512L, 24L * n); }

    static PrecisionContext for_degree(long n, unsigned long seed = 0) {
        return make(default_bits(n), seed);
    }

    PrecisionContext with_bits(long new_bits) const {
        return make(new_bits, seed);
    }
};

}  // namespace hpz
