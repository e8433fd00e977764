#include "hpz/hermite_pade.hpp"

namespace hpz {

long hp_required_length(long n) { return 3 * n + 5; }

DenseMatrix hp_build_matrix(const GermSeries& s1, const GermSeries& s2, long n) {
    if (s1.center() != Center::Infinity || s2.center() != Center::Infinity)
        throw std::invalid_argument("hp_build_matrix: germs must be centered at infinity");
    if (s1.top() < 3 * n + 2 || s2.top() < 3 * n + 2)
        throw std::invalid_argument("hp_build_matrix: insufficient series length");
    const mpfr_prec_t prec = std::max(s1.prec(), s2.prec());
    const long rows = 3 * n + 2, cols = 3 * n + 3;
    DenseMatrix a(rows, cols, prec);
    long row = 0;
    for (long m = n; m >= -(2 * n + 1); --m, ++row) {
        if (m >= 0) a.set(row, m, BigComplex::from_long(1, 0, prec));  // q0 block
        for (long i = 0; i <= n; ++i) {
            a.set(row, (n + 1) + i, s1.coeff(i - m));
            a.set(row, 2 * (n + 1) + i, s2.coeff(i - m));
        }
    }
    return a;
}

BigComplex hp_combination_coeff(const Polynomial& q0, const Polynomial& q1, const Polynomial& q2,
                                const GermSeries& s1, const GermSeries& s2, long e) {
    const mpfr_prec_t prec = std::max(s1.prec(), s2.prec());
    BigComplex acc(prec);
    Scratch s(prec);
    if (e <= 0 && -e < static_cast<long>(q0.size())) acc += q0[static_cast<std::size_t>(-e)];
    for (long i = 0; i < static_cast<long>(q1.size()); ++i)
        fused_addmul(acc, q1[static_cast<std::size_t>(i)], s1.coeff(e + i), s);
    for (long i = 0; i < static_cast<long>(q2.size()); ++i)
        fused_addmul(acc, q2[static_cast<std::size_t>(i)], s2.coeff(e + i), s);
    return acc;
}

namespace {

HPTriple hp_attempt(const GermSeries& s1, const GermSeries& s2, long n,
                    const PrecisionContext& ctx) {
    DenseMatrix m = hp_build_matrix(s1, s2, n);
    NullvectorOptions opts;
    opts.check_residual = false;  // certified independently below
    std::vector<BigComplex> v = nullvector(m, ctx, opts);

    auto block = [&](long j) {
        std::vector<BigComplex> c(v.begin() + j * (n + 1), v.begin() + (j + 1) * (n + 1));
        Polynomial p(std::move(c));
        p.trim(ctx.zero_tol);
        return p;
    };
    HPTriple t{n, block(0), block(1), block(2), {}, BigFloat(ctx.bits), BigFloat(ctx.bits), ctx.bits};

    // Each recomputed constraint coefficient is measured against its own
    // row scale; the germ coefficients are steeply graded for far branch
    // points and a global norm would wash the small rows out.
    BigFloat worst(ctx.bits);
    for (long e = -n; e <= 2 * n + 1; ++e) {
        BigFloat rownorm = BigFloat::from_long(e <= 0 && -e <= n ? 1 : 0, ctx.bits);
        for (long i = 0; i <= n; ++i)
            rownorm += mag1(s1.coeff(e + i)) + mag1(s2.coeff(e + i));
        worst = max(worst, mag1(hp_combination_coeff(t.q0, t.q1, t.q2, s1, s2, e)) / rownorm);
    }
    for (long e = 2 * n + 2; e <= 2 * n + 4; ++e)
        t.remainder_coeffs.push_back(hp_combination_coeff(t.q0, t.q1, t.q2, s1, s2, e));
    t.residual = worst;
    t.residual_bound = ctx.zero_tol;
    return t;
}

}  // namespace

HPTriple hp_solve_from_germs(const GermSeries& s1, const GermSeries& s2, long n,
                             const PrecisionContext& ctx) {
    HPTriple t = hp_attempt(s1, s2, n, ctx);
    if (!(t.residual > t.residual_bound)) return t;
    throw precision_exhausted_error("hp_solve: residual " + t.residual.to_string(6) +
                                    " exceeds bound " + t.residual_bound.to_string(6));
}

HPTriple hp_solve(const FunctionSpec& spec1, const FunctionSpec& spec2, long n,
                  const PrecisionContext& ctx) {
    if (n < 0) throw std::invalid_argument("hp_solve: n must be >= 0");
    long len = hp_required_length(n);
    GermSeries s1 = resolve_germ(spec1, Center::Infinity, len, ctx);
    GermSeries s2 = resolve_germ(spec2, Center::Infinity, len, ctx);
    try {
        return hp_solve_from_germs(s1, s2, n, ctx);
    } catch (const precision_exhausted_error&) {
        // One doubling, then give up.
        PrecisionContext wide = ctx.with_bits(2 * ctx.bits);
        GermSeries w1 = resolve_germ(spec1, Center::Infinity, len, wide);
        GermSeries w2 = resolve_germ(spec2, Center::Infinity, len, wide);
        return hp_solve_from_germs(w1, w2, n, wide);
    }
}

}  // namespace hpz
