#include "crnms/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace crnms {

namespace {

constexpr long kGrid = 40;  // px per stoichiometric unit
constexpr long kPad = 1;    // grid units of margin around the content

struct Mapper {
    long min_x, min_y, max_x, max_y;  // content bounds in grid units
    long width() const { return (max_x - min_x + 2 * kPad) * kGrid; }
    long height() const { return (max_y - min_y + 2 * kPad) * kGrid; }
    long px(long x) const { return (x - min_x + kPad) * kGrid; }
    long py(long y) const { return height() - (y - min_y + kPad) * kGrid; }
};

std::string complex_label(const Network& net, const std::vector<long>& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (c[i] != 1) out += std::to_string(c[i]);
        out += net.species[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string box_diagram_svg(const Network& net) {
    if (net.n_reactions() != 2 || net.n_species() != 2)
        throw std::invalid_argument(
            "box_diagram_svg: the box diagram needs exactly two reactions over two species");

    const std::vector<long>& y1 = net.reactions[0].reactant;
    const std::vector<long>& p1 = net.reactions[0].product;
    const std::vector<long>& y2 = net.reactions[1].reactant;
    const std::vector<long>& p2 = net.reactions[1].product;

    Mapper m{0, 0, 1, 1};
    for (const std::vector<long>* c : {&y1, &p1, &y2, &p2}) {
        m.min_x = std::min(m.min_x, (*c)[0]);
        m.min_y = std::min(m.min_y, (*c)[1]);
        m.max_x = std::max(m.max_x, (*c)[0]);
        m.max_y = std::max(m.max_y, (*c)[1]);
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << m.width() << "\" height=\""
        << m.height() << "\" viewBox=\"0 0 " << m.width() << " " << m.height() << "\">\n";
    svg << "  <defs>\n"
        << "    <marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" "
           "refY=\"3\" orient=\"auto\">\n"
        << "      <path d=\"M0,0 L7,3 L0,6 z\" fill=\"#1f3a5f\"/>\n"
        << "    </marker>\n"
        << "  </defs>\n";
    svg << "  <rect width=\"" << m.width() << "\" height=\"" << m.height()
        << "\" fill=\"white\"/>\n";

    // Unit grid with emphasized axes through the origin.
    for (long x = m.min_x - kPad + 1; x < m.max_x + kPad; ++x)
        svg << "  <line class=\"grid\" x1=\"" << m.px(x) << "\" y1=\"0\" x2=\"" << m.px(x)
            << "\" y2=\"" << m.height() << "\" stroke=\""
            << (x == 0 ? "#9aa5b1" : "#e3e7eb") << "\" stroke-width=\"1\"/>\n";
    for (long y = m.min_y - kPad + 1; y < m.max_y + kPad; ++y)
        svg << "  <line class=\"grid\" x1=\"0\" y1=\"" << m.py(y) << "\" x2=\"" << m.width()
            << "\" y2=\"" << m.py(y) << "\" stroke=\"" << (y == 0 ? "#9aa5b1" : "#e3e7eb")
            << "\" stroke-width=\"1\"/>\n";

    // The reactant box: axis-parallel rectangle with the reactants at
    // opposite corners (possibly degenerate).
    long bx = std::min(y1[0], y2[0]), by = std::min(y1[1], y2[1]);
    long bw = std::max(y1[0], y2[0]) - bx, bh = std::max(y1[1], y2[1]) - by;
    svg << "  <rect class=\"box\" x=\"" << m.px(bx) << "\" y=\"" << m.py(by + bh) << "\" width=\""
        << bw * kGrid << "\" height=\"" << bh * kGrid
        << "\" fill=\"#cdd9e5\" fill-opacity=\"0.55\" stroke=\"none\"/>\n";

    // The diagonal joining the two reactant complexes.
    svg << "  <line class=\"diagonal\" x1=\"" << m.px(y1[0]) << "\" y1=\"" << m.py(y1[1])
        << "\" x2=\"" << m.px(y2[0]) << "\" y2=\"" << m.py(y2[1])
        << "\" stroke=\"#54657e\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";

    // One arrow per reaction, reactant to product.
    for (int k = 0; k < 2; ++k) {
        const std::vector<long>& a = net.reactions[static_cast<std::size_t>(k)].reactant;
        const std::vector<long>& b = net.reactions[static_cast<std::size_t>(k)].product;
        svg << "  <line class=\"arrow\" x1=\"" << m.px(a[0]) << "\" y1=\"" << m.py(a[1])
            << "\" x2=\"" << m.px(b[0]) << "\" y2=\"" << m.py(b[1])
            << "\" stroke=\"#1f3a5f\" stroke-width=\"2.5\" marker-end=\"url(#arrowhead)\"/>\n";
    }

    // Complex labels (reactants first, then products), then axis names.
    for (int k = 0; k < 2; ++k) {
        const Reaction& r = net.reactions[static_cast<std::size_t>(k)];
        svg << "  <circle cx=\"" << m.px(r.reactant[0]) << "\" cy=\"" << m.py(r.reactant[1])
            << "\" r=\"4\" fill=\"#1f3a5f\"/>\n";
        svg << "  <text class=\"label\" x=\"" << m.px(r.reactant[0]) + 6 << "\" y=\""
            << m.py(r.reactant[1]) - 6 << "\" font-family=\"sans-serif\" font-size=\"13\">"
            << complex_label(net, r.reactant) << "</text>\n";
        svg << "  <text class=\"label\" x=\"" << m.px(r.product[0]) + 6 << "\" y=\""
            << m.py(r.product[1]) - 6 << "\" font-family=\"sans-serif\" font-size=\"13\">"
            << complex_label(net, r.product) << "</text>\n";
    }
    svg << "  <text class=\"axis\" x=\"" << m.width() - 18 << "\" y=\"" << m.py(0) - 8
        << "\" font-family=\"sans-serif\" font-size=\"13\" font-style=\"italic\">"
        << net.species[0] << "</text>\n";
    svg << "  <text class=\"axis\" x=\"" << m.px(0) + 8 << "\" y=\"14"
        << "\" font-family=\"sans-serif\" font-size=\"13\" font-style=\"italic\">"
        << net.species[1] << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace crnms
