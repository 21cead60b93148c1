#ifndef MONPOW_PLOT_HPP
#define MONPOW_PLOT_HPP

#include <string>

#include <monpow/ideal.hpp>

namespace monpow
{

struct plot_options {
    double unit_px = 12.0;
    double max_canvas_px = 4096.0;
    bool newton_boundary = true;
    bool highlight_persistent = true;
};

// Staircase diagram of G(I) as a standalone SVG document. Byte-identical
// output for identical input.
std::string render_svg(const monomial_ideal &i, const plot_options &opts = {});

} // namespace monpow

#endif
