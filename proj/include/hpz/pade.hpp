#pragma once

#include "hpz/germs.hpp"
#include "hpz/linsys.hpp"
#include "hpz/polynomial.hpp"

namespace hpz {

/// Diagonal approximant data at infinity: p0 + p1*f vanishes through the
/// z^(-n) coefficient, and [n/n]_f := -p0/p1.
struct PadePair {
    long n = 0;
    Polynomial p0, p1;
    std::vector<BigComplex> remainder_coeffs;
    BigFloat residual;
    BigFloat residual_bound;
    long bits_used = 0;
};

long pade_required_length(long n);

/// Kernel of the (2n+1) x (2n+2) system (z^m coefficients vanish for
/// m = n ... -n), residual certified by independent series recomputation,
/// one precision doubling on failure.
PadePair pade_solve_from_germ(const GermSeries& s, long n, const PrecisionContext& ctx);
PadePair pade_solve(const FunctionSpec& spec, long n, const PrecisionContext& ctx);

/// |f(z) - (-p0/p1)(z)| with the caller supplying f(z) in closed form.
/// Throws if the probe lands on a pole (|p1(z)| below tolerance scale).
BigFloat pade_error_probe(const PadePair& pair, const BigComplex& z, const BigComplex& f_value,
                          const PrecisionContext& ctx);

BigComplex pade_combination_coeff(const Polynomial& p0, const Polynomial& p1, const GermSeries& s,
                                  long e);

}  // namespace hpz
