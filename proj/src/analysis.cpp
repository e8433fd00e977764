#include "hpz/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace hpz {

BigFloat EquilibriumModel::cdf(const BigFloat& x) {
    const mpfr_prec_t prec = x.prec();
    BigFloat one = BigFloat::from_long(1, prec);
    if (x <= -one) return BigFloat(prec);
    if (x >= one) return one;
    // arccos(-x)/pi = atan2(sqrt(1-x^2), -x)/pi
    BigFloat s = sqrt(one - x * x);
    return atan2(s, -x) / BigFloat::pi(prec);
}

BigFloat EquilibriumModel::green(const BigComplex& z) {
    const mpfr_prec_t prec = z.prec();
    BigComplex one = BigComplex::from_long(1, 0, prec);
    BigComplex w = z * z - one;
    // principal sqrt
    BigFloat r = abs(w);
    BigFloat th = atan2(w.im, w.re);
    BigFloat half = BigFloat::from_double(0.5, prec);
    BigComplex sq{sqrt(r) * cos(th * half), sqrt(r) * sin(th * half)};
    BigFloat m1 = abs(z + sq), m2 = abs(z - sq);
    BigFloat phi = max(m1, m2);  // |phi| >= 1 branch
    BigFloat g = log(phi);
    return g.sign() > 0 ? g : BigFloat(prec);
}

BigFloat EquilibriumModel::robin_constant(mpfr_prec_t prec) {
    return log(BigFloat::from_long(2, prec));
}

namespace {

SymmetryReport greedy_match(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b,
                            const BigFloat& tol) {
    const mpfr_prec_t prec = tol.prec();
    SymmetryReport rep{true, BigFloat(prec)};
    std::vector<bool> used(b.size(), false);
    for (const auto& z : a) {
        long best = -1;
        BigFloat bd(prec);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            BigFloat d = abs(z - b[j]);
            if (best < 0 || d < bd) {
                best = static_cast<long>(j);
                bd = d;
            }
        }
        used[static_cast<std::size_t>(best)] = true;
        rep.max_defect = max(rep.max_defect, bd);
    }
    rep.pass = !(rep.max_defect > tol);
    return rep;
}

}  // namespace

SymmetryReport check_conjugate_symmetry(const ZeroSet& zs, const BigFloat& tol) {
    std::vector<BigComplex> conjs;
    conjs.reserve(zs.roots.size());
    for (const auto& z : zs.roots) conjs.push_back(conj(z));
    return greedy_match(zs.roots, conjs, tol);
}

SymmetryReport check_reflection_pairing(const ZeroSet& zs1, const ZeroSet& zs2,
                                        const BigFloat& tol) {
    if (zs1.roots.size() != zs2.roots.size())
        throw std::invalid_argument("check_reflection_pairing: cardinality mismatch");
    std::vector<BigComplex> neg;
    neg.reserve(zs2.roots.size());
    for (const auto& z : zs2.roots) neg.push_back(-z);
    return greedy_match(zs1.roots, neg, tol);
}

std::vector<HullPoint> convex_hull(std::vector<HullPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const HullPoint& a, const HullPoint& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    if (pts.size() <= 2) return pts;
    auto cross = [](const HullPoint& o, const HullPoint& a, const HullPoint& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<HullPoint> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

namespace {

double seg_dist(const HullPoint& a, const HullPoint& b, double x, double y) {
    double dx = b.x - a.x, dy = b.y - a.y;
    double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((x - a.x) * dx + (y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    double px = a.x + t * dx - x, py = a.y + t * dy - y;
    return std::sqrt(px * px + py * py);
}

}  // namespace

double distance_to_hull_boundary(const std::vector<HullPoint>& hull, double x, double y) {
    if (hull.empty()) return std::numeric_limits<double>::infinity();
    if (hull.size() == 1) {
        double dx = hull[0].x - x, dy = hull[0].y - y;
        return std::sqrt(dx * dx + dy * dy);
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const HullPoint& a = hull[i];
        const HullPoint& b = hull[(i + 1) % hull.size()];
        best = std::min(best, seg_dist(a, b, x, y));
    }
    return best;
}

bool strictly_inside_hull(const std::vector<HullPoint>& hull, double x, double y) {
    if (hull.size() < 3) return false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const HullPoint& a = hull[i];
        const HullPoint& b = hull[(i + 1) % hull.size()];
        double cr = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
        if (cr <= 0) return false;  // hull is counter-clockwise
    }
    return true;
}

namespace {

std::vector<HullPoint> hull_of(const std::vector<BigComplex>& pts) {
    std::vector<HullPoint> h;
    h.reserve(pts.size());
    for (const auto& p : pts) h.push_back({p.re.to_double(), p.im.to_double()});
    return convex_hull(std::move(h));
}

}  // namespace

DoubletReport detect_froissart(const ZeroSet& zeros, const ZeroSet& poles,
                               const std::vector<BigComplex>& branch_points, long genus_bound,
                               const FroissartOptions& opts) {
    DoubletReport rep;
    rep.genus_bound = genus_bound;
    if (zeros.roots.empty() || poles.roots.empty()) return rep;
    std::vector<HullPoint> hull = hull_of(branch_points);
    const mpfr_prec_t prec = zeros.roots.front().prec();
    BigFloat eps = BigFloat::from_double(opts.doublet_eps, prec);
    for (const auto& z : zeros.roots) {
        long best = -1;
        BigFloat bd(prec);
        for (std::size_t j = 0; j < poles.roots.size(); ++j) {
            BigFloat d = abs(z - poles.roots[j]);
            if (best < 0 || d < bd) {
                best = static_cast<long>(j);
                bd = d;
            }
        }
        if (bd < eps) {
            DoubletPair pr{z, poles.roots[static_cast<std::size_t>(best)], bd, false};
            double dist = distance_to_hull_boundary(hull, z.re.to_double(), z.im.to_double());
            pr.far_from_branch_hull = dist > opts.hull_margin;
            rep.pairs.push_back(std::move(pr));
        }
    }
    return rep;
}

BigComplex estimate_chebotarev(const ZeroSet& poles, const std::vector<BigComplex>& branch_points,
                               long k) {
    if (k < 2) throw std::invalid_argument("estimate_chebotarev: k must be >= 2");
    std::vector<HullPoint> hull = hull_of(branch_points);
    std::vector<std::size_t> interior;
    for (std::size_t i = 0; i < poles.roots.size(); ++i) {
        double x = poles.roots[i].re.to_double(), y = poles.roots[i].im.to_double();
        if (branch_points.empty() || strictly_inside_hull(hull, x, y)) interior.push_back(i);
    }
    if (static_cast<long>(interior.size()) < k) throw insufficient_poles_error();

    const mpfr_prec_t prec = poles.roots.front().prec();
    double best_score = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_cluster;
    for (std::size_t a = 0; a < interior.size(); ++a) {
        const BigComplex& p = poles.roots[interior[a]];
        // k-1 nearest interior neighbours (double precision is plenty here)
        std::vector<std::pair<double, std::size_t>> ds;
        ds.reserve(interior.size() - 1);
        for (std::size_t b = 0; b < interior.size(); ++b) {
            if (b == a) continue;
            const BigComplex& q = poles.roots[interior[b]];
            double dx = (q.re - p.re).to_double(), dy = (q.im - p.im).to_double();
            ds.push_back({dx * dx + dy * dy, interior[b]});
        }
        std::partial_sort(ds.begin(), ds.begin() + (k - 1), ds.end());
        double sx = 0, sy = 0;
        for (long t = 0; t < k - 1; ++t) {
            const BigComplex& q = poles.roots[ds[static_cast<std::size_t>(t)].second];
            double dx = (q.re - p.re).to_double(), dy = (q.im - p.im).to_double();
            double ang = std::atan2(dy, dx);
            sx += std::cos(2 * ang);
            sy += std::sin(2 * ang);
        }
        double score = std::sqrt(sx * sx + sy * sy) / static_cast<double>(k - 1);
        if (score < best_score) {
            best_score = score;
            best_cluster.assign(1, interior[a]);
            for (long t = 0; t < k - 1; ++t)
                best_cluster.push_back(ds[static_cast<std::size_t>(t)].second);
        }
    }

    // Robust center of the junction cluster: the plain centroid is biased by
    // whichever arm contributes more neighbours, the geometric median is not.
    BigComplex x(prec);
    for (std::size_t idx : best_cluster) x += poles.roots[idx];
    BigFloat kf = BigFloat::from_long(static_cast<long>(best_cluster.size()), prec);
    x.re /= kf;
    x.im /= kf;
    for (int iter = 0; iter < 50; ++iter) {
        BigComplex num(prec);
        BigFloat den(prec);
        bool on_point = false;
        for (std::size_t idx : best_cluster) {
            const BigComplex& p = poles.roots[idx];
            BigFloat d = abs(p - x);
            if (d.is_zero()) {
                on_point = true;
                break;
            }
            BigFloat w = BigFloat::from_long(1, prec) / d;
            num.re += p.re * w;
            num.im += p.im * w;
            den += w;
        }
        if (on_point) break;
        x = BigComplex{num.re / den, num.im / den};
    }
    return x;
}

BigFloat ks_arcsine(const ZeroSet& zs, const BigFloat& tol) {
    const mpfr_prec_t prec = tol.prec();
    if (zs.roots.empty()) throw std::invalid_argument("ks_arcsine: empty zero set");
    BigFloat one = BigFloat::from_long(1, prec);
    std::vector<BigFloat> xs;
    xs.reserve(zs.roots.size());
    for (const auto& z : zs.roots) {
        if (abs(z.im) > tol || z.re > one + tol || z.re < -(one + tol))
            throw std::invalid_argument("ks_arcsine: root off the segment beyond tol");
        xs.push_back(z.re);
    }
    std::sort(xs.begin(), xs.end());
    const long n = static_cast<long>(xs.size());
    BigFloat nf = BigFloat::from_long(n, prec);
    BigFloat ks(prec);
    for (long i = 0; i < n; ++i) {
        BigFloat f = EquilibriumModel::cdf(xs[static_cast<std::size_t>(i)]);
        BigFloat hi = BigFloat::from_long(i + 1, prec) / nf - f;
        BigFloat lo = f - BigFloat::from_long(i, prec) / nf;
        ks = max(ks, max(abs(hi), abs(lo)));
    }
    return ks;
}

AngelescoReport angelesco_localization(const ZeroSet& q0_roots, const ZeroSet& q1_roots,
                                       const ZeroSet& q2_roots, const Rational& a,
                                       const BigFloat& tol) {
    if (!(a < Rational(0)))
        throw std::invalid_argument("angelesco_localization: requires a < 0");
    const mpfr_prec_t prec = tol.prec();
    BigFloat af = BigFloat::from_rational(a, prec);
    BigFloat one = BigFloat::from_long(1, prec);
    AngelescoReport rep{true, {}, BigFloat(prec)};

    auto check_interval = [&](const ZeroSet& zs, const BigFloat& lo, const BigFloat& hi) {
        for (const auto& z : zs.roots) {
            BigFloat d = abs(z.im);
            if (z.re < lo) d = max(d, lo - z.re);
            if (z.re > hi) d = max(d, z.re - hi);
            rep.max_defect = max(rep.max_defect, d);
            if (d > tol) {
                rep.pass = false;
                rep.offending.push_back(z);
            }
        }
    };
    check_interval(q1_roots, -one, af);
    check_interval(q2_roots, -af, one);
    for (const auto& z : q0_roots.roots) {
        BigFloat d = abs(z.re);
        rep.max_defect = max(rep.max_defect, d);
        if (d > tol) {
            rep.pass = false;
            rep.offending.push_back(z);
        }
    }
    return rep;
}

BigFloat rate_fit(const std::vector<BigFloat>& errors, long n_first, const BigFloat& floor) {
    if (errors.size() < 6) throw std::invalid_argument("rate_fit: need >= 6 consecutive probes");
    const mpfr_prec_t prec = floor.prec() > 128 ? floor.prec() : errors.front().prec();
    std::vector<BigFloat> ys;
    ys.reserve(errors.size());
    for (const auto& e : errors) {
        if (!(e > floor)) throw std::invalid_argument("rate_fit: error value at or below floor");
        ys.push_back(log(e));
    }
    const long m = static_cast<long>(ys.size());
    BigFloat sx(prec), sy(prec), sxx(prec), sxy(prec);
    for (long i = 0; i < m; ++i) {
        BigFloat x = BigFloat::from_long(n_first + i, prec);
        sx += x;
        sy += ys[static_cast<std::size_t>(i)];
        sxx += x * x;
        sxy += x * ys[static_cast<std::size_t>(i)];
    }
    BigFloat mf = BigFloat::from_long(m, prec);
    return (mf * sxy - sx * sy) / (mf * sxx - sx * sx);
}

BigFloat offreal_fraction(const ZeroSet& zs, const BigFloat& threshold) {
    const mpfr_prec_t prec = threshold.prec();
    if (zs.roots.empty()) return BigFloat(prec);
    long n = 0;
    for (const auto& z : zs.roots)
        if (abs(z.im) > threshold) ++n;
    return BigFloat::from_long(n, prec) / BigFloat::from_long(static_cast<long>(zs.roots.size()), prec);
}

}  // namespace hpz
