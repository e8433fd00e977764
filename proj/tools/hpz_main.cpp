// Command-line driver: solver subcommands, figure presets, sweeps, and
// analysis over exported zero sets.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "hpz/analysis.hpp"
#include "hpz/hermite_pade.hpp"
#include "hpz/pade.hpp"
#include "hpz/presets.hpp"
#include "hpz/serialize.hpp"
#include "hpz/svg.hpp"
#include "hpz/twopoint.hpp"

namespace fs = std::filesystem;
using namespace hpz;

namespace {

long resolve_bits(long n, long bits_flag) {
    if (bits_flag > 0) return bits_flag;
    if (const char* env = std::getenv("HP_BITS"); env && *env) {
        long b = std::strtol(env, nullptr, 10);
        if (b > 0) return b;
    }
    return PrecisionContext::default_bits(n);
}

FunctionSpec named_function(const std::string& name, Center center) {
    if (name == "stahl3") return spec_stahl3();
    if (name == "stahl6") return spec_stahl6();
    if (name == "invsqrt") return spec_inv_sqrt();
    if (name == "ratio4")
        return spec_ratio4(center == Center::Infinity ? BranchTag::Minus : BranchTag::Plus);
    if (name == "buslaev")
        return center == Center::Infinity ? spec_buslaev_infinity() : spec_buslaev_origin();
    throw CLI::ValidationError("--func", "unknown function id: " + name);
}

// zeros.csv rows grouped by label (label field is quoted; it may contain commas).
std::vector<ZeroSet> load_zero_sets(const std::string& path, long bits) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::vector<ZeroSet> sets;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("label,", 0) == 0) continue;
        std::string label;
        std::size_t rest = 0;
        if (line[0] == '"') {
            std::size_t close = line.find('"', 1);
            if (close == std::string::npos) throw std::runtime_error("bad csv row: " + line);
            label = line.substr(1, close - 1);
            rest = close + 2;  // skip closing quote and comma
        } else {
            rest = line.find(',') + 1;
            label = line.substr(0, rest - 1);
        }
        std::istringstream row(line.substr(rest));
        std::string re, im, res, mult;
        std::getline(row, re, ',');
        std::getline(row, im, ',');
        std::getline(row, res, ',');
        std::getline(row, mult, ',');
        ZeroSet* zs = nullptr;
        for (auto& s : sets)
            if (s.label == label) zs = &s;
        if (!zs) {
            sets.push_back(ZeroSet{label, {}, {}, {}});
            zs = &sets.back();
        }
        zs->roots.push_back(BigComplex::from_strings(re, im, bits));
        zs->residuals.push_back(BigFloat::from_string(res, bits));
        zs->multiplicity_flags.push_back(mult == "1" || mult == "true");
    }
    return sets;
}

const ZeroSet& pick_set(const std::vector<ZeroSet>& sets, const std::string& label) {
    if (label.empty() && sets.size() == 1) return sets.front();
    for (const auto& s : sets)
        if (s.label == label) return s;
    throw std::runtime_error("label not found in csv: '" + label + "'");
}

std::vector<BigComplex> parse_points(const std::string& text, long bits) {
    // "re,im;re,im;..."
    std::vector<BigComplex> pts;
    std::istringstream all(text);
    std::string item;
    while (std::getline(all, item, ';')) {
        auto comma = item.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad point: " + item);
        pts.push_back(BigComplex::from_strings(item.substr(0, comma), item.substr(comma + 1), bits));
    }
    return pts;
}

void emit_solution_files(const std::string& out_dir, const std::string& stem,
                         const std::string& solution_json, const std::vector<ZeroSet>& sets,
                         const Metadata& meta, const SvgWindow& window, bool svg) {
    fs::create_directories(out_dir);
    write_file((fs::path(out_dir) / (stem + ".json")).string(), solution_json);
    write_file((fs::path(out_dir) / (stem + "_zeros.csv")).string(), zero_sets_to_csv(sets, meta));
    if (svg) {
        const char* colors[] = {"blue", "red", "black"};
        std::vector<SvgLayer> layers;
        for (std::size_t i = 0; i < sets.size(); ++i)
            layers.push_back({&sets[i], colors[i % 3]});
        write_file((fs::path(out_dir) / (stem + ".svg")).string(),
                   render_svg(layers, window, stem, meta));
    }
}

int cmd_hp(const std::string& family, const std::string& a_str, long n, long bits_flag,
           const std::string& out_dir, unsigned long seed) {
    int case_number = family == "case1" ? 1 : family == "case2" ? 2 : 3;
    Rational a = rational_from_string(a_str);
    long bits = resolve_bits(n, bits_flag);
    PrecisionContext ctx = PrecisionContext::make(bits, seed);
    HPTriple t = hp_solve(spec_case(case_number, a, 1), spec_case(case_number, a, 2), n, ctx);
    PrecisionContext rctx = ctx.with_bits(t.bits_used);
    Metadata meta{{"family", family}, {"a", a_str}, {"n", std::to_string(n)},
                  {"bits", std::to_string(bits)}, {"seed", std::to_string(seed)}};
    const char* letter = case_number == 1 ? "Q" : case_number == 2 ? "P" : "U";
    std::vector<ZeroSet> sets;
    const Polynomial* qs[3] = {&t.q0, &t.q1, &t.q2};
    for (int j = 0; j < 3; ++j) {
        std::ostringstream lbl;
        lbl << letter << "_{" << n << "," << j << "}";
        sets.push_back(find_roots(*qs[j], rctx, lbl.str()));
    }
    emit_solution_files(out_dir, "hp_" + family + "_n" + std::to_string(n), hp_triple_to_json(t, meta),
                        sets, meta, SvgWindow{-1.6, 1.6, -1.6, 1.6}, true);
    std::cout << "residual " << t.residual.to_string(6) << " (bound "
              << t.residual_bound.to_string(6) << "), bits " << t.bits_used << "\n";
    if (a > Rational(0)) {
        // fraction of q1/q2 zeros off the real line: sweeping a brackets the
        // degree where the lens vertices escape to infinity
        BigFloat thr = BigFloat::from_string("0.05", rctx.bits);
        std::cout << "offreal fraction (|Im| > 0.05): q1 "
                  << offreal_fraction(sets[1], thr).to_string(4) << ", q2 "
                  << offreal_fraction(sets[2], thr).to_string(4) << "\n";
    }
    return 0;
}

int cmd_pade(const std::string& func, const std::string& json_spec, long n, long bits_flag,
             const std::string& out_dir, unsigned long seed) {
    long bits = resolve_bits(n, bits_flag);
    PrecisionContext ctx = PrecisionContext::make(bits, seed);
    FunctionSpec spec = json_spec.empty() ? named_function(func, Center::Infinity)
                                          : FunctionSpec::from_json(read_file(json_spec));
    PadePair p = pade_solve(spec, n, ctx);
    PrecisionContext rctx = ctx.with_bits(p.bits_used);
    Metadata meta{{"func", func}, {"n", std::to_string(n)}, {"bits", std::to_string(bits)},
                  {"seed", std::to_string(seed)}};
    std::vector<ZeroSet> sets;
    sets.push_back(find_roots(p.p0, rctx, "zeros of [" + std::to_string(n) + "/" + std::to_string(n) + "]"));
    sets.push_back(find_roots(p.p1, rctx, "poles of [" + std::to_string(n) + "/" + std::to_string(n) + "]"));
    emit_solution_files(out_dir, "pade_" + func + "_n" + std::to_string(n), pade_pair_to_json(p, meta),
                        sets, meta, SvgWindow{-2, 2, -2, 2}, true);
    std::cout << "residual " << p.residual.to_string(6) << " (bound " << p.residual_bound.to_string(6)
              << "), bits " << p.bits_used << "\n";
    return 0;
}

int cmd_twopoint(const std::string& func, long n, long bits_flag, const std::string& out_dir,
                 bool symmetric_split, unsigned long seed) {
    long bits = resolve_bits(n, bits_flag);
    PrecisionContext ctx = PrecisionContext::make(bits, seed);
    TwoPointOptions opts;
    opts.symmetric_split = symmetric_split;
    TwoPointPair t = twopoint_solve(named_function(func, Center::Origin),
                                    named_function(func, Center::Infinity), n, ctx, opts);
    PrecisionContext rctx = ctx.with_bits(t.bits_used);
    Metadata meta{{"func", func}, {"n", std::to_string(n)}, {"bits", std::to_string(bits)},
                  {"seed", std::to_string(seed)}};
    std::vector<ZeroSet> sets;
    sets.push_back(find_roots(t.p, rctx, "zeros of B_" + std::to_string(n)));
    sets.push_back(find_roots(t.q, rctx, "poles of B_" + std::to_string(n)));
    emit_solution_files(out_dir, "twopoint_" + func + "_n" + std::to_string(n),
                        twopoint_pair_to_json(t, meta), sets, meta, SvgWindow{-2.5, 2.5, -2.5, 2.5},
                        true);
    std::cout << "residual0 " << t.residual0.to_string(6) << ", residual_inf "
              << t.residual_inf.to_string(6) << " (bound " << t.residual_bound.to_string(6)
              << "), bits " << t.bits_used << "\n";
    return 0;
}

Polynomial poly_from_json(const nlohmann::json& arr, long bits) {
    std::vector<BigComplex> c;
    for (const auto& e : arr)
        c.push_back(BigComplex::from_strings(e.at(0).get<std::string>(), e.at(1).get<std::string>(), bits));
    return Polynomial(std::move(c));
}

int cmd_roots(const std::string& json_path, const std::string& which, long bits_flag,
              const std::string& out_csv, unsigned long seed) {
    nlohmann::json j = nlohmann::json::parse(read_file(json_path));
    long bits = bits_flag > 0 ? bits_flag : j.at("precision_bits").get<long>();
    PrecisionContext ctx = PrecisionContext::make(bits, seed);
    Polynomial p = poly_from_json(j.at(which), bits);
    ZeroSet zs = find_roots(p, ctx, which);
    Metadata meta{{"source", json_path}, {"which", which}, {"bits", std::to_string(bits)}};
    write_file(out_csv, zero_set_to_csv(zs, meta));
    std::cout << zs.roots.size() << " roots written to " << out_csv << "\n";
    return 0;
}

int cmd_analyze(const std::string& check, const std::string& zeros_csv, const std::string& poles_csv,
                const std::string& label, const std::string& label2, const std::string& points,
                const std::string& tol_str, long genus, long k, long bits) {
    nlohmann::json out;
    BigFloat tol = BigFloat::from_string(tol_str, bits);
    std::vector<ZeroSet> sets = load_zero_sets(zeros_csv, bits);
    if (check == "conj") {
        const ZeroSet& zs = pick_set(sets, label);
        SymmetryReport r = check_conjugate_symmetry(zs, tol);
        out = {{"check", "conjugate_symmetry"}, {"pass", r.pass}, {"max_defect", r.max_defect.to_string(20)}};
    } else if (check == "reflect") {
        SymmetryReport r = check_reflection_pairing(pick_set(sets, label), pick_set(sets, label2), tol);
        out = {{"check", "reflection_pairing"}, {"pass", r.pass}, {"max_defect", r.max_defect.to_string(20)}};
    } else if (check == "ks") {
        BigFloat ks = ks_arcsine(pick_set(sets, label), tol);
        out = {{"check", "ks_arcsine"}, {"distance", ks.to_string(20)}};
    } else if (check == "froissart" || check == "chebotarev") {
        std::vector<ZeroSet> psets = load_zero_sets(poles_csv, bits);
        const ZeroSet& poles = pick_set(psets, label2);
        std::vector<BigComplex> bps = parse_points(points, bits);
        if (check == "froissart") {
            DoubletReport dr = detect_froissart(pick_set(sets, label), poles, bps, genus);
            out = {{"check", "froissart"},
                   {"doublet_count", dr.doublet_count()},
                   {"close_pairs", static_cast<long>(dr.pairs.size())},
                   {"genus_bound", genus},
                   {"pass", dr.doublet_count() <= genus}};
        } else {
            BigComplex v = estimate_chebotarev(poles, bps, k);
            out = {{"check", "chebotarev"},
                   {"estimate", {v.re.to_string(20), v.im.to_string(20)}}};
        }
    } else {
        throw CLI::ValidationError("--check", "unknown check: " + check);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_preset(const std::string& id, bool list, const RunOptions& opts) {
    if (list) {
        for (const auto& p : all_presets()) {
            const char* kind = p.kind == PresetKind::Hp ? "hp"
                               : p.kind == PresetKind::Pade ? "pade" : "twopoint";
            std::cout << p.id << "  kind=" << kind;
            if (p.kind == PresetKind::Hp)
                std::cout << " case=" << p.case_number << " a=" << rational_to_string(p.a);
            else
                std::cout << " func=" << p.func;
            std::cout << " n=" << p.n << "\n";
        }
        return 0;
    }
    PresetOutcome o = run_preset(id, opts);
    std::cout << o.report_json;
    return o.hard_pass ? 0 : 1;
}

int cmd_sweep(std::vector<std::string> ids, bool all, long jobs, const RunOptions& opts) {
    if (all) {
        ids.clear();
        for (const auto& p : all_presets()) ids.push_back(p.id);
    }
    if (ids.empty()) throw CLI::ValidationError("--ids", "no presets selected");
    if (jobs < 1) jobs = 1;
    std::atomic<std::size_t> next{0};
    std::atomic<int> failures{0};
    std::mutex io;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= ids.size()) return;
            try {
                PresetOutcome o = run_preset(ids[i], opts);
                std::lock_guard<std::mutex> g(io);
                std::cout << ids[i] << ": " << (o.hard_pass ? "ok" : "FAILED CHECKS") << "\n";
                if (!o.hard_pass) ++failures;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> g(io);
                std::cout << ids[i] << ": error: " << e.what() << "\n";
                ++failures;
            }
        }
    };
    std::vector<std::thread> pool;
    for (long t = 0; t < std::min<long>(jobs, static_cast<long>(ids.size())); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return failures.load() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite-Pade / Pade / two-point approximant toolkit"};
    app.require_subcommand(1);

    std::string family = "case1", a_str = "1/5", func = "stahl3", out_dir = "out";
    std::string json_spec, json_path, which = "q1", out_csv = "roots.csv";
    std::string check = "conj", zeros_csv, poles_csv, label, label2, points, tol_str = "1e-10";
    std::string preset_id;
    long n = 60, bits = 0, genus = 1, kk = 5, jobs = 1, analysis_bits = 256;
    unsigned long seed = 0;
    bool symmetric_split = false, list_presets = false, sweep_all = false;
    std::vector<std::string> sweep_ids, formats;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--bits", bits, "working precision in bits (0 = policy/HP_BITS)");
        c->add_option("--seed", seed, "determinism seed for perturbations");
        c->add_option("--out", out_dir, "output directory");
    };

    CLI::App* hp = app.add_subcommand("hp", "type I triple for a case family");
    hp->add_option("--family", family, "case1|case2|case3")
        ->required()
        ->check(CLI::IsMember({"case1", "case2", "case3"}));
    hp->add_option("--a", a_str, "parameter a as num/den")->required();
    hp->add_option("--n", n, "degree bound")->required();
    add_common(hp);

    CLI::App* pade = app.add_subcommand("pade", "diagonal approximant at infinity");
    pade->add_option("--func", func, "stahl3|stahl6|invsqrt");
    pade->add_option("--json", json_spec, "function spec JSON file (overrides --func)");
    pade->add_option("--n", n, "degree")->required();
    add_common(pade);

    CLI::App* tp = app.add_subcommand("twopoint", "two-point approximant for a germ pair");
    tp->add_option("--func", func, "ratio4|buslaev");
    tp->add_option("--n", n, "degree")->required();
    tp->add_flag("--symmetric-split", symmetric_split, "n+1 conditions at 0 and n at infinity");
    add_common(tp);

    CLI::App* roots = app.add_subcommand("roots", "roots of a stored solution polynomial");
    roots->add_option("--json", json_path, "solution JSON file")->required();
    roots->add_option("--which", which, "q0|q1|q2|p0|p1|p|q");
    roots->add_option("--bits", bits, "working precision in bits");
    roots->add_option("--seed", seed, "determinism seed");
    roots->add_option("--out", out_csv, "output CSV path");

    CLI::App* an = app.add_subcommand("analyze", "checks over exported zero sets");
    an->add_option("--check", check, "conj|reflect|ks|froissart|chebotarev")->required();
    an->add_option("--zeros", zeros_csv, "zeros CSV")->required();
    an->add_option("--poles", poles_csv, "poles CSV (froissart/chebotarev)");
    an->add_option("--label", label, "zero-set label");
    an->add_option("--label2", label2, "second label (reflect) or pole label");
    an->add_option("--branch-points", points, "re,im;re,im;... hull points");
    an->add_option("--tol", tol_str, "tolerance");
    an->add_option("--genus", genus, "doublet bound");
    an->add_option("--k", kk, "cluster size");
    an->add_option("--bits", analysis_bits, "parse precision");

    CLI::App* pre = app.add_subcommand("preset", "run one figure preset");
    pre->add_option("--id", preset_id, "preset id (see --list)");
    pre->add_flag("--list", list_presets, "list presets");
    pre->add_option("--n", n, "degree override (0 = preset default)")->default_val(0);
    pre->add_option("--format", formats, "subset of csv,json,svg (default all)")->delimiter(',');
    add_common(pre);

    CLI::App* sw = app.add_subcommand("sweep", "run many presets");
    sw->add_option("--ids", sweep_ids, "preset ids")->delimiter(',');
    sw->add_flag("--all", sweep_all, "every preset");
    sw->add_option("--jobs", jobs, "parallel workers");
    sw->add_option("--n", n, "degree override (0 = preset defaults)")->default_val(0);
    add_common(sw);

    CLI11_PARSE(app, argc, argv);

    try {
        if (hp->parsed()) return cmd_hp(family, a_str, n, bits, out_dir, seed);
        if (pade->parsed()) return cmd_pade(func, json_spec, n, bits, out_dir, seed);
        if (tp->parsed()) return cmd_twopoint(func, n, bits, out_dir, symmetric_split, seed);
        if (roots->parsed()) return cmd_roots(json_path, which, bits, out_csv, seed);
        if (an->parsed())
            return cmd_analyze(check, zeros_csv, poles_csv, label, label2, points, tol_str, genus,
                               kk, analysis_bits);
        if (pre->parsed()) {
            RunOptions opts;
            opts.n_override = n;
            opts.bits_override = bits;
            opts.seed = seed;
            opts.out_dir = out_dir;
            if (!formats.empty()) {
                opts.write_csv = opts.write_json = opts.write_svg = false;
                for (const auto& f : formats) {
                    if (f == "csv") opts.write_csv = true;
                    else if (f == "json") opts.write_json = true;
                    else if (f == "svg") opts.write_svg = true;
                    else throw CLI::ValidationError("--format", "unknown format: " + f);
                }
            }
            if (!list_presets && preset_id.empty())
                throw CLI::ValidationError("--id", "preset id required (or --list)");
            return cmd_preset(preset_id, list_presets, opts);
        }
        if (sw->parsed()) {
            RunOptions opts;
            opts.n_override = n;
            opts.bits_override = bits;
            opts.seed = seed;
            opts.out_dir = out_dir;
            return cmd_sweep(sweep_ids, sweep_all, jobs, opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
