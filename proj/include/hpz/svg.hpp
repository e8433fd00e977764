#pragma once

#include <string>
#include <vector>

#include "hpz/roots.hpp"
#include "hpz/serialize.hpp"

namespace hpz {

struct SvgWindow {
    double x_min = -2, x_max = 2, y_min = -2, y_max = 2;
};

struct SvgLayer {
    const ZeroSet* points;
    std::string color;  // "blue", "red", "black"
};

/// 1200x1200 scatter plot: one fixed-radius circle per root, axes through the
/// origin, a caption line, and the metadata as a leading comment. Output is
/// byte-deterministic for fixed inputs (points drawn in sorted order).
std::string render_svg(const std::vector<SvgLayer>& layers, const SvgWindow& window,
                       const std::string& caption, const Metadata& meta);

}  // namespace hpz
