#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpz/analysis.hpp"
#include "hpz/germs.hpp"
#include "hpz/svg.hpp"

namespace hpz {

enum class PresetKind { Hp, Pade, TwoPoint };
enum class PresetView { Full, Blue, Red, Black };

struct Preset {
    std::string id;
    PresetKind kind = PresetKind::Hp;
    int case_number = 0;       // HP families
    Rational a;                // HP parameter
    std::string func;          // "stahl3" | "stahl6" | "ratio4" | "buslaev" for PA kinds
    long n = 200;
    PresetView view = PresetView::Full;
    SvgWindow window;
    long genus_bound = 0;      // doublet bound for the Pade presets
};

const std::vector<Preset>& all_presets();
const Preset& preset_by_id(const std::string& id);

struct RunOptions {
    long n_override = 0;     // 0 keeps the preset default
    long bits_override = 0;  // 0 keeps the precision policy (or HP_BITS)
    unsigned long seed = 0;
    std::string out_dir = "out";
    bool write_csv = true;
    bool write_json = true;
    bool write_svg = true;
};

struct PresetOutcome {
    bool hard_pass = true;
    std::string report_json;
    std::vector<std::string> files;
};

/// Runs one preset: solve, extract zeros, run the preset's checks, and write
/// csv/json/svg artifacts under out_dir/<id>/. Deterministic byte-for-byte
/// for fixed inputs. Hard check failures flip hard_pass (the CLI exits
/// nonzero on them); solver errors propagate.
PresetOutcome run_preset(const Preset& p, const RunOptions& opts);
PresetOutcome run_preset(const std::string& id, const RunOptions& opts);

/// Effective (n, bits) a run will use; bits resolves the override, then the
/// HP_BITS environment variable, then the degree policy.
std::pair<long, long> effective_params(const Preset& p, const RunOptions& opts);

}  // namespace hpz
