#pragma once

#include <map>
#include <string>
#include <vector>

#include "hpz/hermite_pade.hpp"
#include "hpz/pade.hpp"
#include "hpz/roots.hpp"
#include "hpz/twopoint.hpp"

namespace hpz {

inline constexpr int kCsvDigits = 40;
inline constexpr int kJsonSchema = 1;

/// Ordered key=value lines prepended as '#' comments to CSV (and embedded in
/// JSON/SVG), carrying n/bits and preset identity.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// CSV with header label,re,im,residual,multiplicity; decimal values at 40
/// significant digits; roots ordered lexicographically by (re, im).
std::string zero_set_to_csv(const ZeroSet& zs, const Metadata& meta);
std::string zero_sets_to_csv(const std::vector<ZeroSet>& sets, const Metadata& meta);

std::string hp_triple_to_json(const HPTriple& t, const Metadata& meta);
std::string pade_pair_to_json(const PadePair& p, const Metadata& meta);
std::string twopoint_pair_to_json(const TwoPointPair& t, const Metadata& meta);
std::string zero_set_to_json(const ZeroSet& zs, const Metadata& meta);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// Stable (re, im) ordering used everywhere output is serialized.
std::vector<std::size_t> sorted_order(const std::vector<BigComplex>& roots);

}  // namespace hpz
