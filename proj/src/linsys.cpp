#include "hpz/linsys.hpp"

#include <algorithm>

namespace hpz {

namespace {

// Largest power-of-two exponent of |re|+|im| over a row/column; 0 for an
// all-zero slice.
long scale_exponent(const BigFloat& mag) {
    if (mag.is_zero()) return 0;
    return mag.exponent();
}

}  // namespace

std::vector<BigComplex> nullvector(const DenseMatrix& m, const PrecisionContext& ctx,
                                   const NullvectorOptions& opts) {
    const long r = m.rows(), c = m.cols();
    if (c != r + 1) throw std::invalid_argument("nullvector: need rows = cols - 1");
    const mpfr_prec_t prec = ctx.bits;

    DenseMatrix a = m;  // elimination workspace

    // The order systems are steeply graded (germ coefficients grow like
    // rho^k), so equilibrate rows and columns by exact powers of two before
    // pivoting. Row scalings leave the kernel untouched; column scalings are
    // undone on the way out. This keeps the rank test scale-invariant.
    std::vector<long> col_shift(static_cast<std::size_t>(c), 0);
    for (long i = 0; i < r; ++i) {
        BigFloat mx(prec);
        for (long j = 0; j < c; ++j) mx = max(mx, mag1(a.at(i, j)));
        long e = scale_exponent(mx);
        if (e == 0) continue;
        for (long j = 0; j < c; ++j) {
            mpfr_mul_2si(a.at(i, j).re.raw(), a.at(i, j).re.raw(), -e, MPFR_RNDN);
            mpfr_mul_2si(a.at(i, j).im.raw(), a.at(i, j).im.raw(), -e, MPFR_RNDN);
        }
    }
    for (long j = 0; j < c; ++j) {
        BigFloat mx(prec);
        for (long i = 0; i < r; ++i) mx = max(mx, mag1(a.at(i, j)));
        long e = scale_exponent(mx);
        col_shift[static_cast<std::size_t>(j)] = e;
        if (e == 0) continue;
        for (long i = 0; i < r; ++i) {
            mpfr_mul_2si(a.at(i, j).re.raw(), a.at(i, j).re.raw(), -e, MPFR_RNDN);
            mpfr_mul_2si(a.at(i, j).im.raw(), a.at(i, j).im.raw(), -e, MPFR_RNDN);
        }
    }

    // Rank threshold against the equilibrated matrix (entries are O(1) now).
    BigFloat row_max(prec);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) row_max = max(row_max, mag1(a.at(i, j)));
    BigFloat pivot_floor = ctx.zero_tol * row_max;

    std::vector<long> pivot_col(static_cast<std::size_t>(r), -1);
    std::vector<bool> col_used(static_cast<std::size_t>(c), false);
    Scratch s(prec);

    for (long k = 0; k < r; ++k) {
        // Full pivot search over the untouched block.
        long pr = -1, pc = -1;
        BigFloat best(prec);
        for (long i = k; i < r; ++i) {
            for (long j = 0; j < c; ++j) {
                if (col_used[static_cast<std::size_t>(j)]) continue;
                BigFloat mg = mag1(a.at(i, j));
                if (mg > best) {
                    best = mg;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0 || !(best > pivot_floor)) throw non_generic_error(k);
        if (pr != k)
            for (long j = 0; j < c; ++j) std::swap(a.at(k, j), a.at(pr, j));
        pivot_col[static_cast<std::size_t>(k)] = pc;
        col_used[static_cast<std::size_t>(pc)] = true;

        for (long i = k + 1; i < r; ++i) {
            if (a.at(i, pc).is_zero()) continue;
            BigComplex f = a.at(i, pc) / a.at(k, pc);
            for (long j = 0; j < c; ++j) {
                if (j == pc) {
                    a.at(i, j) = BigComplex(prec);
                    continue;
                }
                if (col_used[static_cast<std::size_t>(j)] && j != pc) {
                    // Columns already pivoted hold zeros below their pivot row.
                    continue;
                }
                fused_submul(a.at(i, j), f, a.at(k, j), s);
            }
        }
    }

    long free_col = -1;
    for (long j = 0; j < c; ++j)
        if (!col_used[static_cast<std::size_t>(j)]) free_col = j;

    std::vector<BigComplex> v(static_cast<std::size_t>(c), BigComplex(prec));
    v[static_cast<std::size_t>(free_col)] = BigComplex::from_long(1, 0, prec);
    for (long k = r - 1; k >= 0; --k) {
        long pc = pivot_col[static_cast<std::size_t>(k)];
        BigComplex acc(prec);
        for (long j = 0; j < c; ++j) {
            if (j == pc) continue;
            if (v[static_cast<std::size_t>(j)].is_zero()) continue;
            fused_addmul(acc, a.at(k, j), v[static_cast<std::size_t>(j)], s);
        }
        v[static_cast<std::size_t>(pc)] = -(acc / a.at(k, pc));
    }

    // Undo the column scalings: the scaled system solved for x'_j = 2^{e_j} x_j.
    for (long j = 0; j < c; ++j) {
        long e = col_shift[static_cast<std::size_t>(j)];
        if (e == 0) continue;
        mpfr_mul_2si(v[static_cast<std::size_t>(j)].re.raw(), v[static_cast<std::size_t>(j)].re.raw(),
                     -e, MPFR_RNDN);
        mpfr_mul_2si(v[static_cast<std::size_t>(j)].im.raw(), v[static_cast<std::size_t>(j)].im.raw(),
                     -e, MPFR_RNDN);
    }

    // Normalize: largest-magnitude entry becomes exactly 1.
    std::size_t imax = 0;
    BigFloat bm(prec);
    for (std::size_t i = 0; i < v.size(); ++i) {
        BigFloat mg = abs2(v[i]);
        if (mg > bm) {
            bm = mg;
            imax = i;
        }
    }
    BigComplex d = v[imax];
    for (auto& x : v) x = x / d;

    if (opts.check_residual) {
        BigFloat vmax(prec);
        for (const auto& x : v) vmax = max(vmax, mag1(x));
        // Row-relative certification: graded systems make a single global
        // norm meaningless.
        for (long i = 0; i < r; ++i) {
            BigComplex acc(prec);
            BigFloat rownorm(prec);
            for (long j = 0; j < c; ++j) {
                fused_addmul(acc, m.at(i, j), v[static_cast<std::size_t>(j)], s);
                rownorm += mag1(m.at(i, j));
            }
            BigFloat bound = ctx.zero_tol * rownorm * vmax;
            if (mag1(acc) > bound)
                throw precision_exhausted_error("nullvector residual " + mag1(acc).to_string(6) +
                                                " exceeds row bound " + bound.to_string(6));
        }
    }
    return v;
}

std::vector<Rational> nullvector_exact(const RationalMatrix& m) {
    const long r = m.rows(), c = m.cols();
    if (c != r + 1) throw std::invalid_argument("nullvector_exact: need rows = cols - 1");

    // Clear denominators row by row, then run fraction-free elimination on
    // the integer matrix.
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(r),
                                          std::vector<mpz_class>(static_cast<std::size_t>(c)));
    for (long i = 0; i < r; ++i) {
        mpz_class den(1);
        for (long j = 0; j < c; ++j) den = lcm(den, m.at(i, j).get_den());
        for (long j = 0; j < c; ++j) {
            Rational x = m.at(i, j) * Rational(den);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x.get_num();
        }
    }

    std::vector<long> pivot_col(static_cast<std::size_t>(r), -1);
    std::vector<bool> col_used(static_cast<std::size_t>(c), false);
    mpz_class div_prev(1);
    for (long k = 0; k < r; ++k) {
        long pr = -1, pc = -1;
        for (long i = k; i < r && pr < 0; ++i)
            for (long j = 0; j < c; ++j)
                if (!col_used[static_cast<std::size_t>(j)] &&
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) throw non_generic_error(k);
        std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pr)]);
        pivot_col[static_cast<std::size_t>(k)] = pc;
        col_used[static_cast<std::size_t>(pc)] = true;

        const mpz_class pivot = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(pc)];
        for (long i = k + 1; i < r; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            const auto& prow = a[static_cast<std::size_t>(k)];
            const mpz_class lead = row[static_cast<std::size_t>(pc)];
            for (long j = 0; j < c; ++j) {
                if (j == pc) continue;
                mpz_class t = row[static_cast<std::size_t>(j)] * pivot -
                              lead * prow[static_cast<std::size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), div_prev.get_mpz_t());
                row[static_cast<std::size_t>(j)] = t;
            }
            row[static_cast<std::size_t>(pc)] = 0;
        }
        div_prev = pivot;
    }

    long free_col = -1;
    for (long j = 0; j < c; ++j)
        if (!col_used[static_cast<std::size_t>(j)]) free_col = j;

    std::vector<Rational> v(static_cast<std::size_t>(c), Rational(0));
    v[static_cast<std::size_t>(free_col)] = Rational(1);
    for (long k = r - 1; k >= 0; --k) {
        long pc = pivot_col[static_cast<std::size_t>(k)];
        Rational acc(0);
        for (long j = 0; j < c; ++j) {
            if (j == pc) continue;
            if (v[static_cast<std::size_t>(j)] == 0) continue;
            acc += Rational(a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) *
                   v[static_cast<std::size_t>(j)];
        }
        v[static_cast<std::size_t>(pc)] =
            -acc / Rational(a[static_cast<std::size_t>(k)][static_cast<std::size_t>(pc)]);
    }
    return v;
}

}  // namespace hpz
