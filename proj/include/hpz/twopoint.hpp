#pragma once

#include "hpz/germs.hpp"
#include "hpz/linsys.hpp"
#include "hpz/polynomial.hpp"

namespace hpz {

/// Germ pair for the two-point problem; interpolation weights are fixed at
/// (1/2, 1/2) — the n/(n+1) condition split below realizes them.
struct TwoPointProblem {
    GermSeries germ0;    // at the origin
    GermSeries germ_inf; // at infinity
};

/// q*f - p interpolation data: n conditions at 0 and n+1 at infinity by
/// default (symmetric_split flips that to n+1 / n).
struct TwoPointPair {
    long n = 0;
    Polynomial p, q;
    BigFloat residual0, residual_inf;
    BigFloat residual_bound;
    BigComplex next_coeff0, next_coeff_inf;  // first unconstrained coefficients
    long bits_used = 0;
};

struct TwoPointOptions {
    bool symmetric_split = false;  // n+1 conditions at 0 and n at infinity
};

long twopoint_required_length(long n);

TwoPointPair twopoint_solve(const TwoPointProblem& prob, long n, const PrecisionContext& ctx,
                            const TwoPointOptions& opts = {});

TwoPointPair twopoint_solve(const FunctionSpec& spec0, const FunctionSpec& spec_inf, long n,
                            const PrecisionContext& ctx, const TwoPointOptions& opts = {});

/// Coefficient of z^e of q*f0 - p near the origin (e >= 0).
BigComplex twopoint_coeff_origin(const Polynomial& p, const Polynomial& q, const GermSeries& f0,
                                 long e);
/// Coefficient of z^e of q*f_inf - p near infinity (e <= deg q).
BigComplex twopoint_coeff_infinity(const Polynomial& p, const Polynomial& q,
                                   const GermSeries& f_inf, long e);

}  // namespace hpz
