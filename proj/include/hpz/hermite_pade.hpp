#pragma once

#include "hpz/germs.hpp"
#include "hpz/linsys.hpp"
#include "hpz/polynomial.hpp"

namespace hpz {

/// Solution bundle of the degree-n type I problem for [1, f1, f2]:
/// q0 + q1*f1 + q2*f2 vanishes through the z^(-(2n+1)) coefficient.
struct HPTriple {
    long n = 0;
    Polynomial q0, q1, q2;
    std::vector<BigComplex> remainder_coeffs;  // first checked coefficients past the window
    BigFloat residual;       // max in-window coefficient, each relative to its row scale
    BigFloat residual_bound; // zero_tol
    long bits_used = 0;
};

/// Order-condition matrix: 3n+2 rows (coefficient of z^m for m = n down to
/// -(2n+1)) by 3n+3 columns (q0 block, then q1, then q2, each by ascending
/// power). Entry for unknown q_{j,i} in the z^m row is the w^(i-m) series
/// coefficient of f_j, with f_0 == 1 contributing the identity block.
DenseMatrix hp_build_matrix(const GermSeries& s1, const GermSeries& s2, long n);

/// Kernel solve plus independent residual certification by full series
/// multiplication over the constraint window. On a residual failure the
/// caller-facing overload doubles the precision once and retries.
HPTriple hp_solve_from_germs(const GermSeries& s1, const GermSeries& s2, long n,
                             const PrecisionContext& ctx);

HPTriple hp_solve(const FunctionSpec& spec1, const FunctionSpec& spec2, long n,
                  const PrecisionContext& ctx);

/// Series length a degree-n solve needs from each germ (window plus the
/// post-window coefficients kept for the non-degeneracy check).
long hp_required_length(long n);

/// Coefficient of w^e of q0 + q1*f1 + q2*f2 recomputed directly from the
/// polynomials and germ series (independent of the matrix route).
BigComplex hp_combination_coeff(const Polynomial& q0, const Polynomial& q1, const Polynomial& q2,
                                const GermSeries& s1, const GermSeries& s2, long e);

}  // namespace hpz
