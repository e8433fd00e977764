#include "hpz/germs.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace hpz {

namespace {

Rational alpha_of(MomentWeight w) {
    switch (w) {
        case MomentWeight::RootHalfVanishHi:
        case MomentWeight::RootHalfVanishLo:
            return Rational(1, 2);
        case MomentWeight::RootThirdVanishHi:
        case MomentWeight::RootThirdVanishLo:
            return Rational(1, 3);
        default:
            return Rational(0);
    }
}

bool vanishes_at_hi(MomentWeight w) {
    return w == MomentWeight::RootHalfVanishHi || w == MomentWeight::RootThirdVanishHi;
}

void check_case_param(const Rational& a) {
    if (!(a > Rational(-1) && a < Rational(1)))
        throw std::invalid_argument("case parameter a must lie in (-1,1)");
}

}  // namespace

std::vector<BigFloat> markov_moments(const Rational& lo, const Rational& hi, MomentWeight weight,
                                     long count, const PrecisionContext& ctx) {
    if (!(lo < hi)) throw std::invalid_argument("markov_moments: need lo < hi");
    if (count < 1) throw std::invalid_argument("markov_moments: count must be >= 1");
    std::vector<BigFloat> out;
    out.reserve(static_cast<std::size_t>(count));

    if (weight == MomentWeight::Lebesgue) {
        Rational hp(1), lp(1);
        for (long k = 0; k < count; ++k) {
            hp *= hi;
            lp *= lo;
            Rational mk = (hp - lp) / Rational(k + 1);
            out.push_back(BigFloat::from_rational(mk, ctx.bits));
        }
        return out;
    }

    Rational alpha = alpha_of(weight);
    if (alpha == Rational(0)) throw std::invalid_argument("markov_moments: unsupported weight");
    // Germ of ((z-v)/(z-b))^alpha where v is the vanishing endpoint. With the
    // vanishing factor at hi the germ is 1 - sum_k mu_k w^(k+1) (values below
    // 1 to the right of the cut); with it at lo the transform enters with the
    // opposite sign.
    Rational v = vanishes_at_hi(weight) ? hi : lo;
    Rational b = vanishes_at_hi(weight) ? lo : hi;
    GermSeries f = series_mul(binomial_series_exact(Center::Infinity, -v, 1, alpha, count + 2, ctx.bits),
                              binomial_series_exact(Center::Infinity, -b, 1, -alpha, count + 2, ctx.bits));
    for (long k = 0; k < count; ++k)
        out.push_back(vanishes_at_hi(weight) ? -f.coeff(k + 1).re : f.coeff(k + 1).re);
    return out;
}

GermSeries germ_case1(const Rational& a, int member, long length, const PrecisionContext& ctx) {
    check_case_param(a);
    Rational lo = member == 1 ? Rational(-1) : -a;
    Rational hi = member == 1 ? a : Rational(1);
    std::vector<BigFloat> m = markov_moments(lo, hi, MomentWeight::Lebesgue, length, ctx);
    std::vector<BigComplex> c;
    c.reserve(m.size());
    for (auto& x : m) c.push_back(BigComplex::from_real(std::move(x)));
    return GermSeries(Center::Infinity, 1, std::move(c));
}

namespace {

GermSeries root_case_germ(const Rational& a, int member, const Rational& alpha, long length,
                          const PrecisionContext& ctx) {
    check_case_param(a);
    // member 1: ((z-a)/(z+1))^alpha = (1 - a/z)^alpha (1 + 1/z)^(-alpha)
    // member 2: ((z-1)/(z+a))^alpha = (1 - 1/z)^alpha (1 + a/z)^(-alpha)
    Rational c1 = member == 1 ? -a : Rational(-1);
    Rational c2 = member == 1 ? Rational(1) : a;
    return series_mul(binomial_series_exact(Center::Infinity, c1, 1, alpha, length, ctx.bits),
                      binomial_series_exact(Center::Infinity, c2, 1, -alpha, length, ctx.bits));
}

}  // namespace

GermSeries germ_case2(const Rational& a, int member, long length, const PrecisionContext& ctx) {
    return root_case_germ(a, member, Rational(1, 2), length, ctx);
}

GermSeries germ_case3(const Rational& a, int member, long length, const PrecisionContext& ctx) {
    return root_case_germ(a, member, Rational(1, 3), length, ctx);
}

std::vector<BigComplex> branch_points_of(const FunctionSpec& spec, const PrecisionContext& ctx) {
    std::vector<BigComplex> pts;
    switch (spec.family) {
        case Family::MarkovLog:
        case Family::MarkovRootHalf:
        case Family::MarkovRootThird: {
            Rational lo = spec.member == 1 ? Rational(-1) : -spec.a;
            Rational hi = spec.member == 1 ? spec.a : Rational(1);
            pts.push_back(BigComplex::from_rational(lo, ctx.bits));
            pts.push_back(BigComplex::from_rational(hi, ctx.bits));
            break;
        }
        default:
            for (const auto& [re, im] : spec.branch_points)
                pts.push_back(BigComplex::from_strings(re, im, ctx.bits));
    }
    return pts;
}

namespace {

BigComplex branch_tag_factor(BranchTag tag, mpfr_prec_t prec) {
    switch (tag) {
        case BranchTag::Plus: return BigComplex::from_long(1, 0, prec);
        case BranchTag::Minus: return BigComplex::from_long(-1, 0, prec);
        case BranchTag::PlusI: return BigComplex::from_long(0, 1, prec);
        case BranchTag::MinusI: return BigComplex::from_long(0, -1, prec);
    }
    throw std::logic_error("unreachable");
}

// Principal q-th root of w (q >= 1), via polar form.
BigComplex principal_root(const BigComplex& w, long q, mpfr_prec_t prec) {
    BigFloat r = abs(w);
    BigFloat th = atan2(w.im, w.re);
    BigFloat qf = BigFloat::from_long(q, prec);
    BigFloat rq = exp(log(r) / qf);
    BigFloat thq = th / qf;
    return {rq * cos(thq), rq * sin(thq)};
}

}  // namespace

GermSeries germ_algebraic(const FunctionSpec& spec, Center center, long length,
                          const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.bits;
    std::vector<BigComplex> pts;
    for (const auto& [re, im] : spec.branch_points)
        pts.push_back(BigComplex::from_strings(re, im, prec));
    if (pts.empty()) throw std::invalid_argument("germ_algebraic: no branch points");
    if (pts.size() != spec.exponents.size())
        throw std::invalid_argument("germ_algebraic: branch point / exponent count mismatch");

    // Common denominator q of the exponents; used for the exact value at a
    // finite center.
    Rational sum_alpha(0);
    mpz_class q(1);
    for (const auto& e : spec.exponents) {
        sum_alpha += e;
        q = lcm(q, e.get_den());
    }

    GermSeries acc = GermSeries::constant_one(center, length, prec);
    BigComplex value_scale = BigComplex::from_long(1, 0, prec);
    long offset_shift = 0;

    if (center == Center::Infinity) {
        // f = scale * z^(sum alpha) * prod (1 - a_j w)^(alpha_j): the exponent
        // sum must be an integer for a single-valued germ at infinity.
        if (sum_alpha.get_den() != 1)
            throw std::invalid_argument("germ_algebraic: exponent sum not an integer at infinity");
        offset_shift = -static_cast<long>(sum_alpha.get_num().get_si());
        for (std::size_t j = 0; j < pts.size(); ++j) {
            GermSeries u = GermSeries::zero(center, length, prec);
            u.at(0) = BigComplex::from_long(1, 0, prec);
            u.at(1) = -pts[j];
            acc = series_mul(acc, series_binomial_pow(u, spec.exponents[j]));
        }
    } else {
        // f = scale * PV(B^(1/q)) * prod (1 - z/a_j)^(alpha_j),
        // B = prod (-a_j)^(p_j) with p_j = alpha_j * q (exact integer powers).
        BigComplex big_b = BigComplex::from_long(1, 0, prec);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (pts[j].is_zero())
                throw std::invalid_argument("germ_algebraic: center coincides with a branch point");
            Rational pj = spec.exponents[j] * Rational(q);
            long p = pj.get_num().get_si();
            BigComplex base = -pts[j];
            BigComplex powed = pow_ui(base, static_cast<unsigned long>(p >= 0 ? p : -p));
            if (p < 0) powed = BigComplex::from_long(1, 0, prec) / powed;
            big_b = big_b * powed;
            GermSeries u = GermSeries::zero(center, length, prec);
            u.at(0) = BigComplex::from_long(1, 0, prec);
            u.at(1) = -(BigComplex::from_long(1, 0, prec) / pts[j]);
            acc = series_mul(acc, series_binomial_pow(u, spec.exponents[j]));
        }
        long qi = q.get_si();
        value_scale = qi == 1 ? big_b : principal_root(big_b, qi, prec);
    }

    if (!(spec.scale_base == Rational(1))) {
        if (!(spec.scale_base > Rational(0)))
            throw std::invalid_argument("germ_algebraic: scale base must be positive");
        BigFloat base = BigFloat::from_rational(spec.scale_base, prec);
        BigFloat e = BigFloat::from_rational(spec.scale_exp, prec);
        BigFloat s = exp(log(base) * e);
        value_scale.re *= s;
        value_scale.im *= s;
    }
    value_scale = value_scale * branch_tag_factor(spec.branch_tag, prec);

    GermSeries out = acc.scaled(value_scale);
    if (offset_shift != 0)
        out = GermSeries(out.center(), out.offset() + offset_shift, out.coeffs());
    if (!(spec.add_constant == Rational(0)))
        out = out.plus_constant(BigComplex::from_rational(spec.add_constant, prec));
    return out;
}

GermSeries resolve_germ(const FunctionSpec& spec, Center center, long length,
                        const PrecisionContext& ctx) {
    switch (spec.family) {
        case Family::MarkovLog:
            if (center != Center::Infinity)
                throw std::invalid_argument("Markov germs live at infinity");
            return germ_case1(spec.a, spec.member, length, ctx);
        case Family::MarkovRootHalf:
            if (center != Center::Infinity)
                throw std::invalid_argument("Markov germs live at infinity");
            return germ_case2(spec.a, spec.member, length, ctx);
        case Family::MarkovRootThird:
            if (center != Center::Infinity)
                throw std::invalid_argument("Markov germs live at infinity");
            return germ_case3(spec.a, spec.member, length, ctx);
        case Family::AlgebraicProduct:
        case Family::TwoPointRatio:
            return germ_algebraic(spec, center, length, ctx);
    }
    throw std::logic_error("unreachable");
}

FunctionSpec spec_case(int case_number, const Rational& a, int member) {
    FunctionSpec s;
    s.family = case_number == 1   ? Family::MarkovLog
               : case_number == 2 ? Family::MarkovRootHalf
                                  : Family::MarkovRootThird;
    s.a = a;
    s.member = member;
    return s;
}

FunctionSpec spec_stahl3() {
    FunctionSpec s;
    s.family = Family::AlgebraicProduct;
    s.branch_points = {{"-1.2", "0.8"}, {"0.9", "1.5"}, {"0.5", "-1.2"}};
    s.exponents = {Rational(-1, 3), Rational(-1, 3), Rational(-1, 3)};
    return s;
}

FunctionSpec spec_stahl6() {
    FunctionSpec s;
    s.family = Family::AlgebraicProduct;
    s.branch_points = {{"4.3", "1"}, {"2", "0.5"}, {"2", "2"}, {"1", "-3"}, {"4", "2"}, {"3", "5"}};
    s.exponents.assign(6, Rational(-1, 6));
    return s;
}

FunctionSpec spec_ratio4(BranchTag tag) {
    FunctionSpec s;
    s.family = Family::TwoPointRatio;
    s.branch_points = {{"0.9", "-1.1"}, {"0.1", "0.2"}};
    s.exponents = {Rational(1, 4), Rational(-1, 4)};
    s.branch_tag = tag;
    return s;
}

FunctionSpec spec_buslaev_origin() {
    FunctionSpec s;
    s.family = Family::AlgebraicProduct;
    s.branch_points = {{"0.5", "0"}, {"2", "0"}};
    s.exponents = {Rational(-1, 2), Rational(-1, 2)};
    s.scale_base = Rational(2);
    s.scale_exp = Rational(-1, 2);
    return s;
}

FunctionSpec spec_buslaev_infinity() {
    FunctionSpec s = spec_buslaev_origin();
    s.add_constant = Rational(1);
    return s;
}

FunctionSpec spec_inv_sqrt() {
    FunctionSpec s;
    s.family = Family::AlgebraicProduct;
    s.branch_points = {{"1", "0"}, {"-1", "0"}};
    s.exponents = {Rational(-1, 2), Rational(-1, 2)};
    return s;
}

namespace {

const char* family_name(Family f) {
    switch (f) {
        case Family::MarkovLog: return "markov_log";
        case Family::MarkovRootHalf: return "markov_root_half";
        case Family::MarkovRootThird: return "markov_root_third";
        case Family::AlgebraicProduct: return "algebraic_product";
        case Family::TwoPointRatio: return "two_point_ratio";
    }
    throw std::logic_error("unreachable");
}

Family family_from_name(const std::string& s) {
    if (s == "markov_log") return Family::MarkovLog;
    if (s == "markov_root_half") return Family::MarkovRootHalf;
    if (s == "markov_root_third") return Family::MarkovRootThird;
    if (s == "algebraic_product") return Family::AlgebraicProduct;
    if (s == "two_point_ratio") return Family::TwoPointRatio;
    throw std::invalid_argument("unknown family: " + s);
}

const char* tag_name(BranchTag t) {
    switch (t) {
        case BranchTag::Plus: return "+1";
        case BranchTag::Minus: return "-1";
        case BranchTag::PlusI: return "+i";
        case BranchTag::MinusI: return "-i";
    }
    throw std::logic_error("unreachable");
}

BranchTag tag_from_name(const std::string& s) {
    if (s == "+1") return BranchTag::Plus;
    if (s == "-1") return BranchTag::Minus;
    if (s == "+i") return BranchTag::PlusI;
    if (s == "-i") return BranchTag::MinusI;
    throw std::invalid_argument("unknown branch tag: " + s);
}

}  // namespace

std::string FunctionSpec::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["a"] = rational_to_string(a);
    j["member"] = member;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& [re, im] : branch_points) pts.push_back({re, im});
    j["branch_points"] = pts;
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& e : exponents) exps.push_back(rational_to_string(e));
    j["exponents"] = exps;
    j["branch_tag"] = tag_name(branch_tag);
    j["scale_base"] = rational_to_string(scale_base);
    j["scale_exp"] = rational_to_string(scale_exp);
    j["add_constant"] = rational_to_string(add_constant);
    return j.dump(2);
}

FunctionSpec FunctionSpec::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FunctionSpec s;
    s.family = family_from_name(j.at("family").get<std::string>());
    s.a = rational_from_string(j.at("a").get<std::string>());
    s.member = j.at("member").get<int>();
    for (const auto& p : j.at("branch_points"))
        s.branch_points.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    for (const auto& e : j.at("exponents"))
        s.exponents.push_back(rational_from_string(e.get<std::string>()));
    s.branch_tag = tag_from_name(j.at("branch_tag").get<std::string>());
    s.scale_base = rational_from_string(j.at("scale_base").get<std::string>());
    s.scale_exp = rational_from_string(j.at("scale_exp").get<std::string>());
    s.add_constant = rational_from_string(j.at("add_constant").get<std::string>());
    return s;
}

}  // namespace hpz
