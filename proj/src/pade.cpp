#include "hpz/pade.hpp"

namespace hpz {

long pade_required_length(long n) { return 2 * n + 4; }

BigComplex pade_combination_coeff(const Polynomial& p0, const Polynomial& p1, const GermSeries& s,
                                  long e) {
    const mpfr_prec_t prec = s.prec();
    BigComplex acc(prec);
    Scratch sc(prec);
    if (e <= 0 && -e < static_cast<long>(p0.size())) acc += p0[static_cast<std::size_t>(-e)];
    for (long i = 0; i < static_cast<long>(p1.size()); ++i)
        fused_addmul(acc, p1[static_cast<std::size_t>(i)], s.coeff(e + i), sc);
    return acc;
}

namespace {

PadePair pade_attempt(const GermSeries& s, long n, const PrecisionContext& ctx) {
    if (s.center() != Center::Infinity)
        throw std::invalid_argument("pade_solve: germ must be centered at infinity");
    if (s.top() < 2 * n + 1) throw std::invalid_argument("pade_solve: insufficient series length");
    const mpfr_prec_t prec = ctx.bits;
    const long rows = 2 * n + 1, cols = 2 * n + 2;
    DenseMatrix a(rows, cols, prec);
    long row = 0;
    for (long m = n; m >= -n; --m, ++row) {
        if (m >= 0) a.set(row, m, BigComplex::from_long(1, 0, prec));
        for (long i = 0; i <= n; ++i) a.set(row, (n + 1) + i, s.coeff(i - m));
    }
    NullvectorOptions opts;
    opts.check_residual = false;
    std::vector<BigComplex> v = nullvector(a, ctx, opts);

    auto block = [&](long j) {
        std::vector<BigComplex> c(v.begin() + j * (n + 1), v.begin() + (j + 1) * (n + 1));
        Polynomial p(std::move(c));
        p.trim(ctx.zero_tol);
        return p;
    };
    PadePair pr{n, block(0), block(1), {}, BigFloat(ctx.bits), BigFloat(ctx.bits), ctx.bits};
    BigFloat worst(ctx.bits);
    for (long e = -n; e <= n; ++e) {
        BigFloat rownorm = BigFloat::from_long(e <= 0 ? 1 : 0, ctx.bits);
        for (long i = 0; i <= n; ++i) rownorm += mag1(s.coeff(e + i));
        worst = max(worst, mag1(pade_combination_coeff(pr.p0, pr.p1, s, e)) / rownorm);
    }
    for (long e = n + 1; e <= n + 3; ++e)
        pr.remainder_coeffs.push_back(pade_combination_coeff(pr.p0, pr.p1, s, e));
    pr.residual = worst;
    pr.residual_bound = ctx.zero_tol;
    return pr;
}

}  // namespace

PadePair pade_solve_from_germ(const GermSeries& s, long n, const PrecisionContext& ctx) {
    PadePair p = pade_attempt(s, n, ctx);
    if (!(p.residual > p.residual_bound)) return p;
    throw precision_exhausted_error("pade_solve: residual " + p.residual.to_string(6) +
                                    " exceeds bound " + p.residual_bound.to_string(6));
}

PadePair pade_solve(const FunctionSpec& spec, long n, const PrecisionContext& ctx) {
    if (n < 0) throw std::invalid_argument("pade_solve: n must be >= 0");
    long len = pade_required_length(n);
    GermSeries s = resolve_germ(spec, Center::Infinity, len, ctx);
    try {
        return pade_solve_from_germ(s, n, ctx);
    } catch (const precision_exhausted_error&) {
        PrecisionContext wide = ctx.with_bits(2 * ctx.bits);
        GermSeries ws = resolve_germ(spec, Center::Infinity, len, wide);
        return pade_solve_from_germ(ws, n, wide);
    }
}

BigFloat pade_error_probe(const PadePair& pair, const BigComplex& z, const BigComplex& f_value,
                          const PrecisionContext& ctx) {
    BigComplex denom = pair.p1.eval(z);
    BigFloat floor = ctx.zero_tol * max(pair.p1.max_coeff_mag(), BigFloat::from_long(1, ctx.bits));
    if (!(mag1(denom) > floor))
        throw std::domain_error("pade_error_probe: probe point lands on a pole");
    BigComplex approx = -(pair.p0.eval(z) / denom);
    return abs(f_value - approx);
}

}  // namespace hpz
