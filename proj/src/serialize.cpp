#include "hpz/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hpz {

std::vector<std::size_t> sorted_order(const std::vector<BigComplex>& roots) {
    std::vector<std::size_t> idx(roots.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (roots[a].re != roots[b].re) return roots[a].re < roots[b].re;
        return roots[a].im < roots[b].im;
    });
    return idx;
}

namespace {

std::string meta_comment(const Metadata& meta) {
    std::ostringstream os;
    for (const auto& [k, v] : meta) os << "# " << k << "=" << v << "\n";
    return os.str();
}

// Labels carry commas ("Q_{60,1}"), so the label field is always quoted.
void append_rows(std::ostream& os, const ZeroSet& zs) {
    auto order = sorted_order(zs.roots);
    for (std::size_t i : order) {
        os << '"' << zs.label << "\"," << zs.roots[i].re.to_string(kCsvDigits) << ","
           << zs.roots[i].im.to_string(kCsvDigits) << ","
           << zs.residuals[i].to_string(kCsvDigits) << ","
           << (zs.multiplicity_flags.empty() ? 0 : (zs.multiplicity_flags[i] ? 1 : 0)) << "\n";
    }
}

nlohmann::json meta_json(const Metadata& meta) {
    nlohmann::json j;
    for (const auto& [k, v] : meta) j[k] = v;
    return j;
}

nlohmann::json poly_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        arr.push_back({c.re.to_string(kCsvDigits), c.im.to_string(kCsvDigits)});
    return arr;
}

nlohmann::json complex_list_json(const std::vector<BigComplex>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : v) arr.push_back({c.re.to_string(kCsvDigits), c.im.to_string(kCsvDigits)});
    return arr;
}

}  // namespace

std::string zero_set_to_csv(const ZeroSet& zs, const Metadata& meta) {
    std::ostringstream os;
    os << meta_comment(meta) << "label,re,im,residual,multiplicity\n";
    append_rows(os, zs);
    return os.str();
}

std::string zero_sets_to_csv(const std::vector<ZeroSet>& sets, const Metadata& meta) {
    std::ostringstream os;
    os << meta_comment(meta) << "label,re,im,residual,multiplicity\n";
    for (const auto& zs : sets) append_rows(os, zs);
    return os.str();
}

std::string hp_triple_to_json(const HPTriple& t, const Metadata& meta) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["kind"] = "hp_triple";
    j["meta"] = meta_json(meta);
    j["degree"] = t.n;
    j["precision_bits"] = t.bits_used;
    j["residual"] = t.residual.to_string(kCsvDigits);
    j["residual_bound"] = t.residual_bound.to_string(kCsvDigits);
    j["q0"] = poly_json(t.q0);
    j["q1"] = poly_json(t.q1);
    j["q2"] = poly_json(t.q2);
    j["remainder_coeffs"] = complex_list_json(t.remainder_coeffs);
    return j.dump(2) + "\n";
}

std::string pade_pair_to_json(const PadePair& p, const Metadata& meta) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["kind"] = "pade_pair";
    j["meta"] = meta_json(meta);
    j["degree"] = p.n;
    j["precision_bits"] = p.bits_used;
    j["residual"] = p.residual.to_string(kCsvDigits);
    j["residual_bound"] = p.residual_bound.to_string(kCsvDigits);
    j["p0"] = poly_json(p.p0);
    j["p1"] = poly_json(p.p1);
    j["remainder_coeffs"] = complex_list_json(p.remainder_coeffs);
    return j.dump(2) + "\n";
}

std::string twopoint_pair_to_json(const TwoPointPair& t, const Metadata& meta) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["kind"] = "two_point_pair";
    j["meta"] = meta_json(meta);
    j["degree"] = t.n;
    j["precision_bits"] = t.bits_used;
    j["residual0"] = t.residual0.to_string(kCsvDigits);
    j["residual_inf"] = t.residual_inf.to_string(kCsvDigits);
    j["residual_bound"] = t.residual_bound.to_string(kCsvDigits);
    j["p"] = poly_json(t.p);
    j["q"] = poly_json(t.q);
    return j.dump(2) + "\n";
}

std::string zero_set_to_json(const ZeroSet& zs, const Metadata& meta) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["kind"] = "zero_set";
    j["meta"] = meta_json(meta);
    j["label"] = zs.label;
    auto order = sorted_order(zs.roots);
    nlohmann::json roots = nlohmann::json::array();
    nlohmann::json res = nlohmann::json::array();
    nlohmann::json mult = nlohmann::json::array();
    for (std::size_t i : order) {
        roots.push_back({zs.roots[i].re.to_string(kCsvDigits), zs.roots[i].im.to_string(kCsvDigits)});
        res.push_back(zs.residuals[i].to_string(kCsvDigits));
        mult.push_back(zs.multiplicity_flags.empty() ? false : static_cast<bool>(zs.multiplicity_flags[i]));
    }
    j["roots"] = roots;
    j["residuals"] = res;
    j["multiplicity_flags"] = mult;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace hpz
