#pragma once

#include "tuckvol/builders.hpp"
#include "tuckvol/deform.hpp"
#include "tuckvol/labeling.hpp"
#include "tuckvol/triangulation.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace tuckvol {

namespace detail {

// Exact fixed-point formatting: round(r * 1000), half away from zero,
// rendered with up to three decimals. Keeps the emitted SVG byte-stable with
// no floating point.
inline std::string svg_decimal(const Rational& r) {
    const Rational scaled = r * 1000;
    const BigInt num = boost::multiprecision::numerator(scaled);
    const BigInt den = boost::multiprecision::denominator(scaled);  // > 0 in canonical form
    const BigInt n = BigInt(boost::multiprecision::abs(num) * 2 + den) / BigInt(den * 2);
    const std::string sign = num < 0 && n != 0 ? "-" : "";
    const BigInt whole = n / 1000;
    std::string frac = BigInt(n % 1000).str();
    frac.insert(0, 3 - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = sign + whole.str();
    if (!frac.empty()) out += "." + frac;
    return out;
}

}  // namespace detail

// A d=2 picture of the complex: edges, vertices and their labels, optionally
// deformed to one rational time along the labeling-induced deformation, with
// complementary edges stroked distinctly. Output is deterministic.
inline std::string render_svg(const Triangulation& t, const Labeling* l,
                              const Rational& time = Rational(0),
                              bool highlight_complementary = false) {
    if (t.dim != 2) throw std::invalid_argument("render_svg: only d = 2 can be drawn");
    if (time < 0 || time > 1)
        throw std::invalid_argument("render_svg: time must lie in [0, 1]");

    TargetAssignment targets;
    if (l && time != 0)
        targets = targets_from_labeling(t, *l,
                                        l->kind == LabelKind::sperner ? standard_simplex_frame(2)
                                                                      : std::vector<Point>{});

    // Screen position: unit coordinates scaled by 100, y flipped.
    std::map<VertexId, std::pair<std::string, std::string>> at;
    for (const auto& v : t.vertices) {
        Point p = v.coords;
        if (l && time != 0) {
            const Point& target = targets.target_of(v.id);
            p = point_add(point_scale(Rational(1) - time, v.coords), point_scale(time, target));
        }
        at[v.id] = {detail::svg_decimal(p[0] * 100), detail::svg_decimal(p[1] * -100)};
    }

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-230 -230 460 460\" "
           "width=\"640\" height=\"640\">\n";
    svg += "  <style>\n"
           "    line { stroke: #667; stroke-width: 1.5; }\n"
           "    line.complementary { stroke: #c0392b; stroke-width: 4; }\n"
           "    circle { fill: #223; }\n"
           "    text { font: 11px sans-serif; fill: #223; }\n"
           "  </style>\n";
    svg += "  <rect x=\"-230\" y=\"-230\" width=\"460\" height=\"460\" fill=\"#fdfdf8\"/>\n";

    for (const auto& [u, v] : enumerate_edges(t)) {
        bool complementary = false;
        if (highlight_complementary && l && l->has_label(u) && l->has_label(v)) {
            const int a = l->label_of(u), b = l->label_of(v);
            complementary = a + b == 0 && a != 0;
        }
        svg += "  <line x1=\"" + at.at(u).first + "\" y1=\"" + at.at(u).second + "\" x2=\"" +
               at.at(v).first + "\" y2=\"" + at.at(v).second + "\"" +
               (complementary ? " class=\"complementary\"" : "") + "/>\n";
    }

    for (const auto& v : t.vertices) {
        const auto& [x, y] = at.at(v.id);
        svg += "  <circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"3.5\"/>\n";
        std::string caption;
        if (l && l->has_label(v.id)) {
            const int lab = l->label_of(v.id);
            caption = (lab > 0 ? "+" : "") + std::to_string(lab);
        } else {
            caption = "#" + std::to_string(v.id);
        }
        svg += "  <text x=\"" + x + "\" y=\"" + y + "\" dx=\"5\" dy=\"-5\">" + caption + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace tuckvol
