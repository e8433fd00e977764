#include "hpz/svg.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hpz {

namespace {

constexpr int kSize = 1200;
constexpr int kMargin = 60;
constexpr double kRadius = 2.5;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, const SvgWindow& window,
                       const std::string& caption, const Metadata& meta) {
    if (!(window.x_max > window.x_min) || !(window.y_max > window.y_min))
        throw std::invalid_argument("render_svg: empty window");
    const double sx = (kSize - 2.0 * kMargin) / (window.x_max - window.x_min);
    const double sy = (kSize - 2.0 * kMargin) / (window.y_max - window.y_min);
    auto map_x = [&](double x) { return kMargin + (x - window.x_min) * sx; };
    auto map_y = [&](double y) { return kSize - kMargin - (y - window.y_min) * sy; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!--";
    for (const auto& [k, v] : meta) os << " " << k << "=" << v;
    os << " -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kSize << " " << kSize
       << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" fill=\"white\"/>\n";
    os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize - 2 * kMargin
       << "\" height=\"" << kSize - 2 * kMargin
       << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    if (window.x_min < 0 && window.x_max > 0)
        os << "<line x1=\"" << fmt(map_x(0)) << "\" y1=\"" << kMargin << "\" x2=\""
           << fmt(map_x(0)) << "\" y2=\"" << kSize - kMargin
           << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    if (window.y_min < 0 && window.y_max > 0)
        os << "<line x1=\"" << kMargin << "\" y1=\"" << fmt(map_y(0)) << "\" x2=\""
           << kSize - kMargin << "\" y2=\"" << fmt(map_y(0))
           << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 20
       << "\" font-family=\"monospace\" font-size=\"20\">" << xml_escape(caption) << "</text>\n";
    // Axis extent labels.
    os << "<text x=\"" << kMargin << "\" y=\"" << kSize - kMargin + 30
       << "\" font-family=\"monospace\" font-size=\"16\">" << fmt(window.x_min) << "</text>\n";
    os << "<text x=\"" << kSize - kMargin - 40 << "\" y=\"" << kSize - kMargin + 30
       << "\" font-family=\"monospace\" font-size=\"16\">" << fmt(window.x_max) << "</text>\n";

    for (const auto& layer : layers) {
        const ZeroSet& zs = *layer.points;
        auto order = sorted_order(zs.roots);
        for (std::size_t i : order) {
            double x = zs.roots[i].re.to_double();
            double y = zs.roots[i].im.to_double();
            if (x < window.x_min || x > window.x_max || y < window.y_min || y > window.y_max)
                continue;
            os << "<circle cx=\"" << fmt(map_x(x)) << "\" cy=\"" << fmt(map_y(y)) << "\" r=\""
               << kRadius << "\" fill=\"" << layer.color << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hpz
