#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hpz {

// Exact rational scalar. mpq_class keeps num/den canonical (gcd 1, den > 0),
// which is exactly the invariant we need for the oracle paths.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

// Generalized binomial coefficient C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k!,
// computed exactly.
inline Rational binomial(const Rational& alpha, unsigned long k) {
    Rational c(1);
    for (unsigned long j = 0; j < k; ++j) {
        c *= alpha - Rational(static_cast<long>(j));
        c /= Rational(static_cast<long>(j) + 1);
    }
    return c;
}

inline Rational pow_rational(const Rational& q, long e) {
    Rational r(1);
    Rational base = e >= 0 ? q : Rational(1) / q;
    unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

}  // namespace hpz
