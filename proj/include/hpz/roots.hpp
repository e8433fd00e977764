#pragma once

#include <string>
#include <vector>

#include "hpz/polynomial.hpp"
#include "hpz/precision.hpp"

namespace hpz {

struct root_convergence_error : std::runtime_error {
    BigFloat worst_residual;
    explicit root_convergence_error(BigFloat worst)
        : std::runtime_error("root iteration did not converge; worst residual " +
                             worst.to_string(6)),
          worst_residual(std::move(worst)) {}
};

/// Labeled multiset of roots with per-root certified residuals.
struct ZeroSet {
    std::string label;
    std::vector<BigComplex> roots;
    std::vector<BigFloat> residuals;          // |p(root)| / sum_k |c_k||root|^k (backward error)
    std::vector<bool> multiplicity_flags;     // part of a cluster of radius < cluster_eps
};

struct RootOptions {
    long max_iter = 500;
};

/// Simultaneous Aberth-Ehrlich iteration from Fujiwara-bound circles, run to
/// per-root Newton correction < 2^(-bits/2) (or to the Horner noise floor for
/// clustered roots), then one Newton polish per root. Leading/trailing
/// coefficients below zero_tol * ||c||_inf are stripped first; trailing strips
/// record exact zeros at the origin.
ZeroSet find_roots(const Polynomial& p, const PrecisionContext& ctx, std::string label = "",
                   const RootOptions& opts = {});

}  // namespace hpz
