#include <doctest.h>

#include <monpow/plot.hpp>

using namespace monpow;

namespace
{

std::size_t count(const std::string &s, std::string_view what)
{
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) {
        ++n;
    }
    return n;
}

const monomial_ideal small{{0, 2}, {2, 1}, {3, 0}};

} // namespace

TEST_CASE("small staircase")
{
    const auto svg = render_svg(small);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<circle") == 3);
    // Persistent points y^2 and x^3 are highlighted.
    CHECK(count(svg, "fill=\"#b33\"") == 2);
    CHECK(svg.find("points=\"24.00,24.00 24.00,48.00 48.00,48.00 48.00,60.00 60.00,60.00 60.00,72.00 "
                   "84.00,72.00\"") != std::string::npos);
    CHECK(count(svg, "stroke-dasharray") == 1);
}

TEST_CASE("options and determinism")
{
    CHECK(render_svg(small) == render_svg(small));
    plot_options plain;
    plain.newton_boundary = false;
    plain.highlight_persistent = false;
    const auto svg = render_svg(small, plain);
    CHECK(count(svg, "stroke-dasharray") == 0);
    CHECK(count(svg, "fill=\"#b33\"") == 0);
}

TEST_CASE("large ideals stay inside the canvas")
{
    std::vector<monomial> g;
    for (exponent i = 0; i <= 1000; ++i) {
        g.push_back({i * 7, (1000 - i) * 5});
    }
    const auto svg = render_svg(monomial_ideal::from_canonical(g));
    const auto w = std::stod(svg.substr(svg.find("width=\"") + 7));
    const auto h = std::stod(svg.substr(svg.find("height=\"") + 8));
    CHECK(w <= 4096.0);
    CHECK(h <= 4096.0);
    CHECK(count(svg, "<circle") == 1001);
}

TEST_CASE("degenerate ideals")
{
    CHECK(render_svg(monomial_ideal{{2, 3}}).find("<circle") != std::string::npos);
    CHECK(render_svg(monomial_ideal{}).find("</svg>") != std::string::npos);
}
