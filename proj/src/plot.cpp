#include <monpow/plot.hpp>

#include <algorithm>
#include <cstdio>
#include <vector>

#include <monpow/newton.hpp>

namespace monpow
{

namespace
{

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_svg(const monomial_ideal &i, const plot_options &opts)
{
    // One spare unit past the outermost generators on each axis.
    const double ux = static_cast<double>(i.back().a) + 2.0;
    const double uy = static_cast<double>(i.front().b) + 2.0;
    const double margin = 24.0;
    const double scale = std::min(opts.unit_px, (opts.max_canvas_px - 2 * margin) / std::max(ux, uy));
    const double w = ux * scale + 2 * margin, h = uy * scale + 2 * margin;
    auto px = [&](double a) { return margin + a * scale; };
    auto py = [&](double b) { return h - margin - b * scale; };

    std::vector<monomial> corners;
    if (opts.highlight_persistent && !i.is_principal()) {
        corners = persistent_generators(i);
    }

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h)
           + "\" viewBox=\"0 0 " + num(w) + ' ' + num(h) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(ux)) + "\" y2=\"" + num(py(0))
           + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(0)) + "\" y2=\"" + num(py(uy))
           + "\" stroke=\"black\"/>\n";

    // Staircase: down the left edge to the first generator, then alternate
    // right and down through every generator.
    std::string stair = num(px(static_cast<double>(i.front().a))) + ',' + num(py(uy));
    for (std::size_t k = 0; k < i.size(); ++k) {
        const auto a = static_cast<double>(i[k].a), b = static_cast<double>(i[k].b);
        if (k > 0) {
            stair += ' ' + num(px(a)) + ',' + num(py(static_cast<double>(i[k - 1].b)));
        }
        stair += ' ' + num(px(a)) + ',' + num(py(b));
    }
    stair += ' ' + num(px(ux)) + ',' + num(py(static_cast<double>(i.back().b)));
    out += "<polyline fill=\"none\" stroke=\"#1f4e9a\" stroke-width=\"2\" points=\"" + stair + "\"/>\n";

    if (opts.newton_boundary && corners.size() >= 2) {
        std::string hull = num(px(static_cast<double>(corners.front().a))) + ',' + num(py(uy));
        for (const auto &c : corners) {
            hull += ' ' + num(px(static_cast<double>(c.a))) + ',' + num(py(static_cast<double>(c.b)));
        }
        hull += ' ' + num(px(ux)) + ',' + num(py(static_cast<double>(corners.back().b)));
        out += "<polyline fill=\"none\" stroke=\"#b33\" stroke-dasharray=\"6 4\" points=\"" + hull + "\"/>\n";
    }

    const double radius = std::max(1.5, std::min(4.0, scale / 3));
    for (const auto &g : i) {
        const bool corner = std::binary_search(corners.begin(), corners.end(), g);
        out += "<circle cx=\"" + num(px(static_cast<double>(g.a))) + "\" cy=\"" + num(py(static_cast<double>(g.b)))
               + "\" r=\"" + num(corner ? radius * 1.5 : radius) + "\" fill=\"" + (corner ? "#b33" : "#1f4e9a")
               + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace monpow
