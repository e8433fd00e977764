#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpz/roots.hpp"

namespace hpz {

/// Closed-form model of the [-1,1] equilibrium data: arcsine law, Green's
/// function of the complement, Robin constant log 2.
struct EquilibriumModel {
    /// F(x) = arccos(-x)/pi on [-1,1] (clamped outside).
    static BigFloat cdf(const BigFloat& x);
    /// g(z) = log|z + sqrt(z^2-1)| with the root chosen so g >= 0;
    /// identically 0 on the segment.
    static BigFloat green(const BigComplex& z);
    static BigFloat robin_constant(mpfr_prec_t prec);  // log 2
};

struct SymmetryReport {
    bool pass = false;
    BigFloat max_defect;
};

/// Greedy nearest-neighbour matching of the multiset against its conjugate.
SymmetryReport check_conjugate_symmetry(const ZeroSet& zs, const BigFloat& tol);

/// Matches zs1 against {-z : z in zs2}. Throws on cardinality mismatch.
SymmetryReport check_reflection_pairing(const ZeroSet& zs1, const ZeroSet& zs2,
                                        const BigFloat& tol);

struct DoubletPair {
    BigComplex zero, pole;
    BigFloat gap;
    bool far_from_branch_hull = false;
};

struct DoubletReport {
    std::vector<DoubletPair> pairs;  // every zero-pole pair with gap < doublet_eps
    long genus_bound = 0;
    long doublet_count() const {
        long n = 0;
        for (const auto& p : pairs) n += p.far_from_branch_hull ? 1 : 0;
        return n;
    }
};

struct FroissartOptions {
    double doublet_eps = 1e-3;
    double hull_margin = 0.1;
};

/// Pairs each zero with its nearest pole; a pair with gap < doublet_eps lying
/// further than hull_margin from the branch-point hull boundary counts as a
/// spurious doublet.
DoubletReport detect_froissart(const ZeroSet& zeros, const ZeroSet& poles,
                               const std::vector<BigComplex>& branch_points, long genus_bound,
                               const FroissartOptions& opts = {});

struct insufficient_poles_error : std::runtime_error {
    insufficient_poles_error() : std::runtime_error("fewer interior poles than cluster size") {}
};

/// Junction estimate from the pole cloud: among poles interior to the
/// branch-point hull, directions to the k-1 nearest neighbours concentrate in
/// two antipodal lobes along an arc but spread into three at a junction, so
/// the pole minimizing |mean e^{2i theta}| marks it; returns the geometric
/// median of that pole and its neighbours (arm-count independent, unlike the
/// centroid).
BigComplex estimate_chebotarev(const ZeroSet& poles, const std::vector<BigComplex>& branch_points,
                               long k = 5);

/// Kolmogorov-Smirnov distance between the real parts of the roots and the
/// arcsine law on [-1,1]. Throws if any root is further than tol from the
/// segment.
BigFloat ks_arcsine(const ZeroSet& zs, const BigFloat& tol);

struct AngelescoReport {
    bool pass = false;
    std::vector<BigComplex> offending;  // roots violating their localization
    BigFloat max_defect;
};

/// Angelesco localization for a < 0: roots of q1 in [-1,a], roots of q2 in
/// [-a,1] (both real within tol), roots of q0 with |Re| <= tol.
AngelescoReport angelesco_localization(const ZeroSet& q0_roots, const ZeroSet& q1_roots,
                                       const ZeroSet& q2_roots, const Rational& a,
                                       const BigFloat& tol);

/// Least-squares slope of log(error) against n over consecutive degrees.
/// Throws if any error is <= floor.
BigFloat rate_fit(const std::vector<BigFloat>& errors, long n_first, const BigFloat& floor);

/// Fraction of roots with |Im z| > threshold; the descriptive lens metric.
BigFloat offreal_fraction(const ZeroSet& zs, const BigFloat& threshold);

// Planar hull helpers shared by the checks above (positions taken at double
// precision; the hulls come from exact branch-point lists).
struct HullPoint {
    double x, y;
};
std::vector<HullPoint> convex_hull(std::vector<HullPoint> pts);
double distance_to_hull_boundary(const std::vector<HullPoint>& hull, double x, double y);
bool strictly_inside_hull(const std::vector<HullPoint>& hull, double x, double y);

}  // namespace hpz
