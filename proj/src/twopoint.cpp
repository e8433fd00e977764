#include "hpz/twopoint.hpp"

namespace hpz {

long twopoint_required_length(long n) { return n + 3; }

BigComplex twopoint_coeff_origin(const Polynomial& p, const Polynomial& q, const GermSeries& f0,
                                 long e) {
    const mpfr_prec_t prec = f0.prec();
    BigComplex acc(prec);
    Scratch s(prec);
    for (long i = 0; i < static_cast<long>(q.size()); ++i)
        fused_addmul(acc, q[static_cast<std::size_t>(i)], f0.coeff(e - i), s);
    if (e >= 0 && e < static_cast<long>(p.size())) acc -= p[static_cast<std::size_t>(e)];
    return acc;
}

BigComplex twopoint_coeff_infinity(const Polynomial& p, const Polynomial& q,
                                   const GermSeries& f_inf, long e) {
    const mpfr_prec_t prec = f_inf.prec();
    BigComplex acc(prec);
    Scratch s(prec);
    for (long i = 0; i < static_cast<long>(q.size()); ++i)
        fused_addmul(acc, q[static_cast<std::size_t>(i)], f_inf.coeff(i - e), s);
    if (e >= 0 && e < static_cast<long>(p.size())) acc -= p[static_cast<std::size_t>(e)];
    return acc;
}

TwoPointPair twopoint_solve(const TwoPointProblem& prob, long n, const PrecisionContext& ctx,
                            const TwoPointOptions& opts) {
    if (n < 0) throw std::invalid_argument("twopoint_solve: n must be >= 0");
    const GermSeries& f0 = prob.germ0;
    const GermSeries& fi = prob.germ_inf;
    if (f0.center() != Center::Origin || fi.center() != Center::Infinity)
        throw std::invalid_argument("twopoint_solve: germ centers must be (origin, infinity)");
    if (f0.top() < n + 1 || fi.top() < n + 1)
        throw std::invalid_argument("twopoint_solve: insufficient germ length");
    const mpfr_prec_t prec = ctx.bits;

    const long n0 = opts.symmetric_split ? n + 1 : n;       // conditions at 0
    const long ninf = opts.symmetric_split ? n : n + 1;     // conditions at infinity
    const long rows = n0 + ninf, cols = 2 * n + 2;
    DenseMatrix a(rows, cols, prec);
    long row = 0;
    for (long e = 0; e < n0; ++e, ++row) {
        if (e <= n) a.set(row, e, BigComplex::from_long(-1, 0, prec));
        for (long i = 0; i <= n; ++i) a.set(row, (n + 1) + i, f0.coeff(e - i));
    }
    for (long e = n; e > n - ninf; --e, ++row) {
        if (e >= 0) a.set(row, e, BigComplex::from_long(-1, 0, prec));
        for (long i = 0; i <= n; ++i) a.set(row, (n + 1) + i, fi.coeff(i - e));
    }

    NullvectorOptions nopts;
    nopts.check_residual = false;
    std::vector<BigComplex> v = nullvector(a, ctx, nopts);

    auto block = [&](long j) {
        std::vector<BigComplex> c(v.begin() + j * (n + 1), v.begin() + (j + 1) * (n + 1));
        Polynomial p(std::move(c));
        p.trim(ctx.zero_tol);
        return p;
    };
    TwoPointPair t{n,
                   block(0),
                   block(1),
                   BigFloat(prec),
                   BigFloat(prec),
                   ctx.zero_tol,
                   BigComplex(prec),
                   BigComplex(prec),
                   ctx.bits};

    BigFloat w0(prec), wi(prec);
    for (long e = 0; e < n0; ++e) {
        BigFloat rownorm = BigFloat::from_long(e <= n ? 1 : 0, prec);
        for (long i = 0; i <= n; ++i) rownorm += mag1(f0.coeff(e - i));
        w0 = max(w0, mag1(twopoint_coeff_origin(t.p, t.q, f0, e)) / rownorm);
    }
    for (long e = n; e > n - ninf; --e) {
        BigFloat rownorm = BigFloat::from_long(e >= 0 ? 1 : 0, prec);
        for (long i = 0; i <= n; ++i) rownorm += mag1(fi.coeff(i - e));
        wi = max(wi, mag1(twopoint_coeff_infinity(t.p, t.q, fi, e)) / rownorm);
    }
    t.residual0 = w0;
    t.residual_inf = wi;
    t.next_coeff0 = twopoint_coeff_origin(t.p, t.q, f0, n0);
    t.next_coeff_inf = twopoint_coeff_infinity(t.p, t.q, fi, n - ninf);

    if (t.residual0 > t.residual_bound || t.residual_inf > t.residual_bound)
        throw precision_exhausted_error("twopoint_solve: residual exceeds bound");
    return t;
}

TwoPointPair twopoint_solve(const FunctionSpec& spec0, const FunctionSpec& spec_inf, long n,
                            const PrecisionContext& ctx, const TwoPointOptions& opts) {
    long len = twopoint_required_length(n);
    auto attempt = [&](const PrecisionContext& c) {
        TwoPointProblem prob{resolve_germ(spec0, Center::Origin, len, c),
                             resolve_germ(spec_inf, Center::Infinity, len, c)};
        return twopoint_solve(prob, n, c, opts);
    };
    try {
        return attempt(ctx);
    } catch (const precision_exhausted_error&) {
        return attempt(ctx.with_bits(2 * ctx.bits));
    }
}

}  // namespace hpz
