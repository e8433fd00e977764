#pragma once

#include <stdexcept>
#include <vector>

#include "hpz/bigcomplex.hpp"
#include "hpz/precision.hpp"
#include "hpz/rational.hpp"

namespace hpz {

struct non_generic_error : std::runtime_error {
    long numerical_rank;
    explicit non_generic_error(long rank)
        : std::runtime_error("non-generic input: kernel dimension >= 2 (numerical rank " +
                             std::to_string(rank) + ")"),
          numerical_rank(rank) {}
};

struct precision_exhausted_error : std::runtime_error {
    explicit precision_exhausted_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dense row-major complex matrix.
class DenseMatrix {
public:
    DenseMatrix(long rows, long cols, mpfr_prec_t prec)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), BigComplex(prec)) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    BigComplex& at(long r, long c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
    const BigComplex& at(long r, long c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
    /// Writes a value while keeping the cell at the matrix precision.
    void set(long r, long c, const BigComplex& v) { at(r, c).set_value(v); }

private:
    long rows_, cols_;
    std::vector<BigComplex> e_;
};

struct NullvectorOptions {
    bool check_residual = true;  // verify ||Mv|| against a saved copy of M
};

/// One-dimensional kernel of an r x (r+1) matrix by Gaussian elimination with
/// full pivoting. The returned vector has its largest-magnitude entry equal
/// to 1. Throws non_generic_error when two or more columns stay unpivotable
/// above the rank threshold zero_tol * (row max-norm).
std::vector<BigComplex> nullvector(const DenseMatrix& m, const PrecisionContext& ctx,
                                   const NullvectorOptions& opts = {});

/// Exact rational matrix for the oracle path.
class RationalMatrix {
public:
    RationalMatrix(long rows, long cols) : rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows * cols), Rational(0)) {}
    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Rational& at(long r, long c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Rational& at(long r, long c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

private:
    long rows_, cols_;
    std::vector<Rational> e_;
};

/// Exact kernel vector via fraction-free (Bareiss) elimination after the rows
/// are scaled integral; normalized with the pivot-free coordinate set to 1.
std::vector<Rational> nullvector_exact(const RationalMatrix& m);

}  // namespace hpz
