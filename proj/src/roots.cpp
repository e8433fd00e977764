#include "hpz/roots.hpp"

#include <algorithm>

namespace hpz {

namespace {

// Horner value together with the magnitude sum used as an evaluation noise
// scale: S = sum |c_k| |x|^k.
void eval_with_scale(const std::vector<BigComplex>& c, const BigComplex& x, BigComplex& value,
                     BigFloat& scale, Scratch& s) {
    const mpfr_prec_t prec = x.prec();
    value = c.back();
    scale = mag1(c.back());
    BigFloat ax = mag1(x);
    for (long i = static_cast<long>(c.size()) - 2; i >= 0; --i) {
        BigComplex t = c[static_cast<std::size_t>(i)];
        fused_addmul(t, value, x, s);
        value = std::move(t);
        scale = scale * ax + mag1(c[static_cast<std::size_t>(i)]);
    }
    (void)prec;
}

BigComplex eval_vec(const std::vector<BigComplex>& c, const BigComplex& x, Scratch& s) {
    BigComplex acc = c.back();
    for (long i = static_cast<long>(c.size()) - 2; i >= 0; --i) {
        BigComplex t = c[static_cast<std::size_t>(i)];
        fused_addmul(t, acc, x, s);
        acc = std::move(t);
    }
    return acc;
}

}  // namespace

ZeroSet find_roots(const Polynomial& p, const PrecisionContext& ctx, std::string label,
                   const RootOptions& opts) {
    const mpfr_prec_t prec = ctx.bits;
    const auto& full = p.coeffs();
    if (full.empty()) throw std::invalid_argument("find_roots: empty polynomial");

    BigFloat cmax(prec);
    for (const auto& c : full) cmax = max(cmax, mag1(c));
    if (cmax.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
    BigFloat strip_tol = ctx.zero_tol * cmax;

    long hi = static_cast<long>(full.size()) - 1;
    while (hi > 0 && !(mag1(full[static_cast<std::size_t>(hi)]) > strip_tol)) --hi;
    long lo = 0;
    while (lo < hi && !(mag1(full[static_cast<std::size_t>(lo)]) > strip_tol)) ++lo;
    const long origin_zeros = lo;
    const long d = hi - lo;
    if (d < 1) throw std::invalid_argument("find_roots: degree < 1 after stripping");

    std::vector<BigComplex> c(full.begin() + lo, full.begin() + hi + 1);
    std::vector<BigComplex> dc;  // derivative
    dc.reserve(static_cast<std::size_t>(d));
    for (long i = 1; i <= d; ++i) {
        BigComplex t = c[static_cast<std::size_t>(i)];
        BigFloat k = BigFloat::from_long(i, prec);
        t.re *= k;
        t.im *= k;
        dc.push_back(std::move(t));
    }

    // Fujiwara bound: 2 * max_k (|c_{d-k}| / |c_d|)^(1/k); used as the
    // outermost scale and for coincident-iterate nudges.
    BigFloat lead = mag1(c.back());
    BigFloat radius(prec);
    for (long k = 1; k <= d; ++k) {
        BigFloat r = mag1(c[static_cast<std::size_t>(d - k)]);
        if (r.is_zero()) continue;
        BigFloat rk = exp(log(r / lead) / BigFloat::from_long(k, prec));
        radius = max(radius, rk);
    }
    radius = radius * BigFloat::from_long(2, prec);
    if (radius.is_zero()) radius = BigFloat::from_long(1, prec);

    // Starting points on circles sized by the Newton polygon of the
    // coefficients (upper convex hull of (k, log|c_k|)): each polygon edge
    // (k1,e1)-(k2,e2) predicts k2-k1 root moduli near (|c_k1|/|c_k2|)^(1/m).
    // A single circle stalls the iteration when root moduli are strongly
    // graded, which the solver polynomials are.
    std::vector<std::pair<long, double>> pts;
    for (long k = 0; k <= d; ++k) {
        const BigComplex& ck = c[static_cast<std::size_t>(k)];
        if (ck.is_zero()) continue;
        pts.push_back({k, static_cast<double>(mag1(ck).exponent())});
    }
    std::vector<std::pair<long, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            double cr = (b.first - a.first) * (p.second - a.second) -
                        (b.second - a.second) * (p.first - a.first);
            if (cr >= 0) hull.pop_back();  // keep the upper hull
            else break;
        }
        hull.push_back(p);
    }

    BigFloat two_pi = BigFloat::pi(prec) * BigFloat::from_long(2, prec);
    BigFloat phase = BigFloat::from_double(0.4, prec) +
                     two_pi * BigFloat::from_long(static_cast<long>(ctx.seed % 1009), prec) /
                         BigFloat::from_long(1009, prec);
    std::vector<BigComplex> x;
    x.reserve(static_cast<std::size_t>(d));
    BigFloat ln2 = log(BigFloat::from_long(2, prec));
    long edge_idx = 0;
    for (std::size_t h = 0; h + 1 < hull.size(); ++h, ++edge_idx) {
        long m = hull[h + 1].first - hull[h].first;
        double slope = (hull[h].second - hull[h + 1].second) / static_cast<double>(m);
        BigFloat r = exp(ln2 * BigFloat::from_double(slope, prec));
        for (long j = 0; j < m; ++j) {
            BigFloat th = two_pi * (BigFloat::from_long(2 * j + 1, prec) /
                                    BigFloat::from_long(2 * m, prec)) +
                          phase + BigFloat::from_double(0.61803398875 * edge_idx, prec);
            x.push_back({r * cos(th), r * sin(th)});
        }
    }

    BigFloat stop = BigFloat::pow2(-(ctx.bits / 2), prec);
    BigFloat noise = BigFloat::pow2(-ctx.bits, prec) * BigFloat::from_long(4 * d, prec);
    std::vector<bool> done(static_cast<std::size_t>(d), false);
    Scratch s(prec);
    BigComplex one = BigComplex::from_long(1, 0, prec);

    // A root is frozen only on the evaluation-noise certificate; a small
    // Aberth correction alone also happens when the repulsion term blows up,
    // so it only feeds the global stopping test.
    bool converged = false;
    for (long iter = 0; iter < opts.max_iter && !converged; ++iter) {
        std::vector<BigComplex> next = x;
        converged = true;
        for (long i = 0; i < d; ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            BigComplex pv(prec);
            BigFloat sc(prec);
            eval_with_scale(c, x[static_cast<std::size_t>(i)], pv, sc, s);
            if (!(mag1(pv) > sc * noise)) {
                done[static_cast<std::size_t>(i)] = true;  // at the evaluation noise floor
                continue;
            }
            BigComplex dv = eval_vec(dc, x[static_cast<std::size_t>(i)], s);
            if (dv.is_zero()) {
                // stationary point; nudge deterministically
                next[static_cast<std::size_t>(i)].re += radius * stop;
                converged = false;
                continue;
            }
            BigComplex newton = pv / dv;
            BigComplex rep(prec);
            for (long j = 0; j < d; ++j) {
                if (j == i) continue;
                BigComplex diff = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
                if (diff.is_zero()) {
                    diff.re = radius * stop;  // split coincident iterates
                }
                rep += one / diff;
            }
            BigComplex denom = one - newton * rep;
            BigComplex corr = denom.is_zero() ? newton : newton / denom;
            next[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - corr;
            BigFloat rel = stop * (BigFloat::from_long(1, prec) + mag1(x[static_cast<std::size_t>(i)]));
            if (mag1(corr) > rel) converged = false;
        }
        x = std::move(next);
    }

    // One Newton polish per root.
    for (long i = 0; i < d; ++i) {
        BigComplex pv = eval_vec(c, x[static_cast<std::size_t>(i)], s);
        BigComplex dv = eval_vec(dc, x[static_cast<std::size_t>(i)], s);
        if (!dv.is_zero()) x[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - pv / dv;
    }

    ZeroSet zs;
    zs.label = std::move(label);
    BigFloat root_tol = BigFloat::pow2(-(ctx.bits / 3), prec);
    BigFloat worst(prec);
    for (long i = 0; i < origin_zeros; ++i) {
        zs.roots.push_back(BigComplex(prec));
        zs.residuals.push_back(mag1(full[0]) / cmax);
    }
    for (long i = 0; i < d; ++i) {
        const BigComplex& r = x[static_cast<std::size_t>(i)];
        // backward error against the Horner magnitude sum; a sharp scale also
        // when the coefficient profile is strongly peaked
        BigComplex pv(prec);
        BigFloat sc(prec);
        eval_with_scale(c, r, pv, sc, s);
        BigFloat res = abs(pv) / sc;
        worst = max(worst, res);
        zs.roots.push_back(r);
        zs.residuals.push_back(res);
    }
    if (!converged || worst > root_tol) throw root_convergence_error(worst);

    BigFloat cluster_eps = BigFloat::pow2(-(ctx.bits / 8), prec);
    const std::size_t m = zs.roots.size();
    zs.multiplicity_flags.assign(m, false);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (mag1(zs.roots[i] - zs.roots[j]) < cluster_eps) {
                zs.multiplicity_flags[i] = true;
                zs.multiplicity_flags[j] = true;
            }
    return zs;
}

}  // namespace hpz
