#include "hpz/presets.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hpz/hermite_pade.hpp"
#include "hpz/pade.hpp"
#include "hpz/serialize.hpp"
#include "hpz/twopoint.hpp"

namespace hpz {

namespace {

std::vector<Preset> build_table() {
    std::vector<Preset> t;
    SvgWindow hp_win{-1.6, 1.6, -1.6, 1.6};
    SvgWindow stahl3_win{-2, 2, -2, 2};
    SvgWindow stahl6_win{-1, 6, -4, 6};
    SvgWindow ratio4_win{-2, 2, -2, 2};
    SvgWindow bus_win{-2.5, 2.5, -2.5, 2.5};

    auto pade_preset = [&](std::string id, std::string func, long n, PresetView v, SvgWindow w,
                           long genus) {
        Preset p;
        p.id = std::move(id);
        p.kind = PresetKind::Pade;
        p.func = std::move(func);
        p.n = n;
        p.view = v;
        p.window = w;
        p.genus_bound = genus;
        t.push_back(std::move(p));
    };
    auto tp_preset = [&](std::string id, std::string func, long n, PresetView v, SvgWindow w) {
        Preset p;
        p.id = std::move(id);
        p.kind = PresetKind::TwoPoint;
        p.func = std::move(func);
        p.n = n;
        p.view = v;
        p.window = w;
        p.genus_bound = 1;
        t.push_back(std::move(p));
    };
    auto hp_preset = [&](std::string id, int case_number, Rational a, long n, PresetView v) {
        Preset p;
        p.id = std::move(id);
        p.kind = PresetKind::Hp;
        p.case_number = case_number;
        p.a = std::move(a);
        p.n = n;
        p.view = v;
        p.window = hp_win;
        t.push_back(std::move(p));
    };

    pade_preset("fig1_1", "stahl3", 130, PresetView::Full, stahl3_win, 1);
    pade_preset("fig1_2", "stahl3", 130, PresetView::Red, stahl3_win, 1);
    pade_preset("fig1_3", "stahl3", 130, PresetView::Blue, stahl3_win, 1);
    pade_preset("fig1_4", "stahl6", 103, PresetView::Full, stahl6_win, 4);
    tp_preset("fig2_1", "buslaev", 120, PresetView::Full, bus_win);
    tp_preset("fig2_2", "ratio4", 199, PresetView::Full, ratio4_win);
    tp_preset("fig2_3", "ratio4", 199, PresetView::Blue, ratio4_win);
    tp_preset("fig2_4", "ratio4", 199, PresetView::Red, ratio4_win);

    // Angelesco configuration, a = -1/10: log and sqrt families, full + blue.
    hp_preset("fig3_1", 1, Rational(-1, 10), 200, PresetView::Full);
    hp_preset("fig3_2", 1, Rational(-1, 10), 200, PresetView::Blue);
    hp_preset("fig3_3", 2, Rational(-1, 10), 200, PresetView::Full);
    hp_preset("fig3_4", 2, Rational(-1, 10), 200, PresetView::Blue);

    // Overlapping-support sweep: groups 4..8 cover a = 1/5, 2/5, 5/8, 73/100,
    // 4/5 with four views per family (full, q0, q1, q2).
    struct Group {
        const char* prefix;
        Rational a;
        Rational a_case3;
        long n_case3;
    };
    const Group groups[] = {
        {"fig4", Rational(1, 5), Rational(1, 5), 200},
        {"fig5", Rational(2, 5), Rational(2, 5), 200},
        {"fig6", Rational(5, 8), Rational(5, 8), 200},
        {"fig7", Rational(73, 100), Rational(73, 100), 300},
        {"fig8", Rational(4, 5), Rational(17, 20), 200},
    };
    const PresetView views[] = {PresetView::Full, PresetView::Blue, PresetView::Red,
                                PresetView::Black};
    for (const auto& g : groups) {
        int idx = 1;
        for (int case_number = 1; case_number <= 3; ++case_number) {
            Rational a = case_number == 3 ? g.a_case3 : g.a;
            long n = case_number == 3 ? g.n_case3 : 200;
            for (PresetView v : views) {
                hp_preset(std::string(g.prefix) + "_" + std::to_string(idx), case_number, a, n, v);
                ++idx;
            }
        }
    }
    return t;
}

}  // namespace

const std::vector<Preset>& all_presets() {
    static const std::vector<Preset> table = build_table();
    return table;
}

const Preset& preset_by_id(const std::string& id) {
    for (const auto& p : all_presets())
        if (p.id == id) return p;
    throw std::invalid_argument("unknown preset id: " + id);
}

std::pair<long, long> effective_params(const Preset& p, const RunOptions& opts) {
    long n = opts.n_override > 0 ? opts.n_override : p.n;
    long bits = 0;
    if (opts.bits_override > 0) {
        bits = opts.bits_override;
    } else if (const char* env = std::getenv("HP_BITS"); env && *env) {
        bits = std::strtol(env, nullptr, 10);
    }
    if (bits <= 0) bits = PrecisionContext::default_bits(n);
    return {n, bits};
}

namespace {

const char* case_letter(int case_number) {
    return case_number == 1 ? "Q" : case_number == 2 ? "P" : "U";
}

std::string poly_label(int case_number, long n, int j) {
    std::ostringstream os;
    os << case_letter(case_number) << "_{" << n << "," << j << "}";
    return os.str();
}

std::string defect_str(const BigFloat& v) { return v.to_string(20); }

nlohmann::json sym_json(const SymmetryReport& r) {
    return {{"pass", r.pass}, {"max_defect", defect_str(r.max_defect)}};
}

struct Artifacts {
    std::vector<ZeroSet> sets;
    std::vector<SvgLayer> layers;  // points into sets by index after fill
    std::string solution_json;
    nlohmann::json report;
    bool hard_pass = true;
};

FunctionSpec func_by_name(const std::string& name, Center center) {
    if (name == "stahl3") return spec_stahl3();
    if (name == "stahl6") return spec_stahl6();
    if (name == "invsqrt") return spec_inv_sqrt();
    if (name == "ratio4")
        return spec_ratio4(center == Center::Infinity ? BranchTag::Minus : BranchTag::Plus);
    if (name == "buslaev")
        return center == Center::Infinity ? spec_buslaev_infinity() : spec_buslaev_origin();
    throw std::invalid_argument("unknown function id: " + name);
}

Artifacts compute_hp(const Preset& p, long n, const PrecisionContext& ctx, const Metadata& meta) {
    Artifacts art;
    FunctionSpec s1 = spec_case(p.case_number, p.a, 1);
    FunctionSpec s2 = spec_case(p.case_number, p.a, 2);
    HPTriple triple = hp_solve(s1, s2, n, ctx);
    PrecisionContext rctx = ctx.with_bits(triple.bits_used);

    art.sets.push_back(find_roots(triple.q0, rctx, poly_label(p.case_number, n, 0)));
    art.sets.push_back(find_roots(triple.q1, rctx, poly_label(p.case_number, n, 1)));
    art.sets.push_back(find_roots(triple.q2, rctx, poly_label(p.case_number, n, 2)));
    art.solution_json = hp_triple_to_json(triple, meta);

    BigFloat sym_tol = BigFloat::from_string("1e-10", ctx.bits);
    nlohmann::json checks;
    checks["residual"] = triple.residual.to_string(20);
    checks["residual_bound"] = triple.residual_bound.to_string(20);
    checks["residual_pass"] = !(triple.residual > triple.residual_bound);
    for (int j = 0; j < 3; ++j) {
        SymmetryReport r = check_conjugate_symmetry(art.sets[static_cast<std::size_t>(j)], sym_tol);
        checks["conjugate_symmetry_q" + std::to_string(j)] = sym_json(r);
        if (!r.pass) art.hard_pass = false;
    }
    {
        SymmetryReport r = check_reflection_pairing(art.sets[1], art.sets[2], sym_tol);
        checks["reflection_q1_vs_q2"] = sym_json(r);
        // Hard assertion only in the log case; report-only for the others.
        if (p.case_number == 1 && !r.pass) art.hard_pass = false;
    }
    if (p.a < Rational(0)) {
        BigFloat tol = BigFloat::from_string("1e-6", ctx.bits);
        AngelescoReport ar = angelesco_localization(art.sets[0], art.sets[1], art.sets[2], p.a, tol);
        checks["angelesco"] = {{"pass", ar.pass}, {"max_defect", defect_str(ar.max_defect)}};
        // Only the log family has the exact symmetry that pins the q0 zeros
        // to the axis; the root families approach it only as n grows, so
        // their localization stays report-only.
        if (p.case_number == 1 && !ar.pass) art.hard_pass = false;
    } else {
        BigFloat thr = BigFloat::from_string("0.05", ctx.bits);
        checks["lens_offreal_fraction_q1"] = offreal_fraction(art.sets[1], thr).to_string(6);
        checks["lens_offreal_fraction_q2"] = offreal_fraction(art.sets[2], thr).to_string(6);
    }
    art.report = std::move(checks);

    const char* colors[] = {"blue", "red", "black"};
    switch (p.view) {
        case PresetView::Full:
            for (int j = 0; j < 3; ++j) art.layers.push_back({nullptr, colors[j]});
            break;
        case PresetView::Blue: art.layers.push_back({nullptr, "blue"}); break;
        case PresetView::Red: art.layers.push_back({nullptr, "red"}); break;
        case PresetView::Black: art.layers.push_back({nullptr, "black"}); break;
    }
    // Layer -> set binding happens in run_preset (sets vector is stable there).
    return art;
}

Artifacts compute_pade(const Preset& p, long n, const PrecisionContext& ctx, const Metadata& meta) {
    Artifacts art;
    FunctionSpec spec = func_by_name(p.func, Center::Infinity);
    PadePair pair = pade_solve(spec, n, ctx);
    PrecisionContext rctx = ctx.with_bits(pair.bits_used);
    std::ostringstream lz, lp;
    lz << "zeros of [" << n << "/" << n << "]";
    lp << "poles of [" << n << "/" << n << "]";
    art.sets.push_back(find_roots(pair.p0, rctx, lz.str()));  // zeros of -p0 = zeros of p0
    art.sets.push_back(find_roots(pair.p1, rctx, lp.str()));
    art.solution_json = pade_pair_to_json(pair, meta);

    nlohmann::json checks;
    checks["residual"] = pair.residual.to_string(20);
    checks["residual_bound"] = pair.residual_bound.to_string(20);
    checks["residual_pass"] = !(pair.residual > pair.residual_bound);

    std::vector<BigComplex> bps = branch_points_of(spec, rctx);
    DoubletReport dr = detect_froissart(art.sets[0], art.sets[1], bps, p.genus_bound);
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& d : dr.pairs)
        pairs.push_back({{"zero", {d.zero.re.to_string(20), d.zero.im.to_string(20)}},
                         {"pole", {d.pole.re.to_string(20), d.pole.im.to_string(20)}},
                         {"gap", defect_str(d.gap)},
                         {"far_from_branch_hull", d.far_from_branch_hull}});
    checks["froissart"] = {{"pairs", pairs},
                           {"doublet_count", dr.doublet_count()},
                           {"genus_bound", dr.genus_bound},
                           {"pass", dr.doublet_count() <= dr.genus_bound}};
    if (dr.doublet_count() > dr.genus_bound) art.hard_pass = false;
    try {
        BigComplex v = estimate_chebotarev(art.sets[1], bps);
        checks["chebotarev_estimate"] = {v.re.to_string(20), v.im.to_string(20)};
    } catch (const insufficient_poles_error&) {
        checks["chebotarev_estimate"] = nullptr;
    }
    art.report = std::move(checks);

    switch (p.view) {
        case PresetView::Full:
            art.layers.push_back({nullptr, "blue"});
            art.layers.push_back({nullptr, "red"});
            break;
        case PresetView::Blue: art.layers.push_back({nullptr, "blue"}); break;
        default: art.layers.push_back({nullptr, "red"}); break;
    }
    return art;
}

Artifacts compute_twopoint(const Preset& p, long n, const PrecisionContext& ctx,
                           const Metadata& meta) {
    Artifacts art;
    FunctionSpec s0 = func_by_name(p.func, Center::Origin);
    FunctionSpec si = func_by_name(p.func, Center::Infinity);
    TwoPointPair pair = twopoint_solve(s0, si, n, ctx);
    PrecisionContext rctx = ctx.with_bits(pair.bits_used);
    std::ostringstream lz, lp;
    lz << "zeros of B_" << n;
    lp << "poles of B_" << n;
    art.sets.push_back(find_roots(pair.p, rctx, lz.str()));
    art.sets.push_back(find_roots(pair.q, rctx, lp.str()));
    art.solution_json = twopoint_pair_to_json(pair, meta);

    nlohmann::json checks;
    checks["residual0"] = pair.residual0.to_string(20);
    checks["residual_inf"] = pair.residual_inf.to_string(20);
    checks["residual_bound"] = pair.residual_bound.to_string(20);
    checks["residual_pass"] =
        !(pair.residual0 > pair.residual_bound) && !(pair.residual_inf > pair.residual_bound);
    if (p.func == "buslaev") {
        BigFloat sym_tol = BigFloat::from_string("1e-10", ctx.bits);
        SymmetryReport rz = check_conjugate_symmetry(art.sets[0], sym_tol);
        SymmetryReport rp = check_conjugate_symmetry(art.sets[1], sym_tol);
        checks["conjugate_symmetry_zeros"] = sym_json(rz);
        checks["conjugate_symmetry_poles"] = sym_json(rp);
        if (!rz.pass || !rp.pass) art.hard_pass = false;
    }
    art.report = std::move(checks);

    switch (p.view) {
        case PresetView::Full:
            art.layers.push_back({nullptr, "blue"});
            art.layers.push_back({nullptr, "red"});
            break;
        case PresetView::Blue: art.layers.push_back({nullptr, "blue"}); break;
        default: art.layers.push_back({nullptr, "red"}); break;
    }
    return art;
}

}  // namespace

PresetOutcome run_preset(const Preset& p, const RunOptions& opts) {
    auto [n, bits] = effective_params(p, opts);
    PrecisionContext ctx = PrecisionContext::make(bits, opts.seed);
    Metadata meta{{"preset", p.id},
                  {"n", std::to_string(n)},
                  {"bits", std::to_string(bits)},
                  {"seed", std::to_string(opts.seed)}};

    Artifacts art;
    switch (p.kind) {
        case PresetKind::Hp: art = compute_hp(p, n, ctx, meta); break;
        case PresetKind::Pade: art = compute_pade(p, n, ctx, meta); break;
        case PresetKind::TwoPoint: art = compute_twopoint(p, n, ctx, meta); break;
    }

    // Bind svg layers to the computed sets: Full draws all sets in order,
    // single views pick by index (q0/zeros -> 0, q1/poles -> 1, q2 -> 2).
    std::vector<SvgLayer> layers = art.layers;
    if (layers.size() == art.sets.size()) {
        for (std::size_t i = 0; i < layers.size(); ++i) layers[i].points = &art.sets[i];
    } else {
        std::size_t pick = 0;
        if (p.view == PresetView::Red) pick = 1;
        if (p.view == PresetView::Black) pick = 2;
        layers[0].points = &art.sets[pick];
    }

    namespace fs = std::filesystem;
    fs::path dir = fs::path(opts.out_dir) / p.id;
    fs::create_directories(dir);

    PresetOutcome out;
    out.hard_pass = art.hard_pass;
    nlohmann::json rep;
    rep["schema"] = kJsonSchema;
    rep["kind"] = "preset_report";
    for (const auto& [k, v] : meta) rep["meta"][k] = v;
    rep["checks"] = art.report;
    rep["hard_pass"] = art.hard_pass;
    out.report_json = rep.dump(2) + "\n";

    if (opts.write_csv) {
        std::string path = (dir / "zeros.csv").string();
        write_file(path, zero_sets_to_csv(art.sets, meta));
        out.files.push_back(path);
    }
    if (opts.write_json) {
        std::string path = (dir / "solution.json").string();
        write_file(path, art.solution_json);
        out.files.push_back(path);
        path = (dir / "report.json").string();
        write_file(path, out.report_json);
        out.files.push_back(path);
    }
    if (opts.write_svg) {
        std::ostringstream cap;
        cap << p.id << "  n=" << n << "  bits=" << bits;
        std::string path = (dir / "figure.svg").string();
        write_file(path, render_svg(layers, p.window, cap.str(), meta));
        out.files.push_back(path);
    }
    return out;
}

PresetOutcome run_preset(const std::string& id, const RunOptions& opts) {
    return run_preset(preset_by_id(id), opts);
}

}  // namespace hpz
