#pragma once

#include <string>
#include <vector>

#include "hpz/precision.hpp"
#include "hpz/rational.hpp"
#include "hpz/series.hpp"

namespace hpz {

enum class Family {
    MarkovLog,        // Cauchy transform of Lebesgue measure on E_j
    MarkovRootHalf,   // ((z -/+ a)/(z +/- 1))^(1/2), value 1 at infinity
    MarkovRootThird,  // same with exponent 1/3
    AlgebraicProduct, // scale * prod_j (z - a_j)^(alpha_j) (+ constant)
    TwoPointRatio,    // ((z-a1)/(z-a2))^alpha, sugar over AlgebraicProduct
};

enum class BranchTag { Plus, Minus, PlusI, MinusI };

enum class MomentWeight {
    Lebesgue,
    RootHalfVanishHi,   // density ~ ((hi-x)/(x-lo))^(1/2)
    RootHalfVanishLo,
    RootThirdVanishHi,  // density ~ ((hi-x)/(x-lo))^(1/3)
    RootThirdVanishLo,
};

/// Declarative description of one test function; the unit of every CLI
/// preset. Branch-point coordinates are kept as decimal strings so they parse
/// exactly at whatever working precision a run asks for.
struct FunctionSpec {
    Family family = Family::MarkovLog;
    Rational a = Rational(0);  // parameter of the Case families
    int member = 1;            // which function of the pair (1 or 2)
    std::vector<std::pair<std::string, std::string>> branch_points;  // [re, im]
    std::vector<Rational> exponents;
    BranchTag branch_tag = BranchTag::Plus;
    Rational scale_base = Rational(1);  // prefactor scale_base^scale_exp, base > 0
    Rational scale_exp = Rational(1);
    Rational add_constant = Rational(0);

    std::string to_json() const;
    static FunctionSpec from_json(const std::string& text);
};

/// Moments of the named measures, entry k = integral of x^k d(mu).
/// Lebesgue moments come from the closed-form antiderivative; root-weight
/// moments are read off the binomial germ series of ((z-hi)/(z-lo))^alpha
/// (or its mirror), each coefficient an exact rational rounded once.
std::vector<BigFloat> markov_moments(const Rational& lo, const Rational& hi, MomentWeight weight,
                                     long count, const PrecisionContext& ctx);

/// Case-family germs at infinity (offset 1 Markov transforms for the log
/// case, offset 0 unit-at-infinity algebraic germs for the root cases).
GermSeries germ_case1(const Rational& a, int member, long length, const PrecisionContext& ctx);
GermSeries germ_case2(const Rational& a, int member, long length, const PrecisionContext& ctx);
GermSeries germ_case3(const Rational& a, int member, long length, const PrecisionContext& ctx);

/// Algebraic-product germ at the requested center.
GermSeries germ_algebraic(const FunctionSpec& spec, Center center, long length,
                          const PrecisionContext& ctx);

/// Resolves any FunctionSpec to its germ.
GermSeries resolve_germ(const FunctionSpec& spec, Center center, long length,
                        const PrecisionContext& ctx);

/// Branch points as complex numbers at working precision (for hulls etc.).
std::vector<BigComplex> branch_points_of(const FunctionSpec& spec, const PrecisionContext& ctx);

// Ready-made specs for the built-in function families.
FunctionSpec spec_case(int case_number, const Rational& a, int member);
FunctionSpec spec_stahl3();       // 1/((z-a1)(z-a2)(z-a3))^(1/3), three complex branch points
FunctionSpec spec_stahl6();       // 1/((z-a1)...(z-a6))^(1/6)
FunctionSpec spec_ratio4(BranchTag tag);  // ((z-a1)/(z-a2))^(1/4)
FunctionSpec spec_buslaev_origin();       // ((1-2z)(2-z))^(-1/2)
FunctionSpec spec_buslaev_infinity();     // ((2z-1)(z-2))^(-1/2) + 1
FunctionSpec spec_inv_sqrt();             // 1/sqrt(z^2-1)

}  // namespace hpz
