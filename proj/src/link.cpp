#include <monpow/link.hpp>

#include <algorithm>

namespace monpow
{

namespace
{

std::vector<monomial_ideal> transposed(std::span<const monomial_ideal> parts)
{
    std::vector<monomial_ideal> out;
    out.reserve(parts.size());
    for (const auto &p : parts) {
        out.push_back(transpose(p));
    }
    return out;
}

// Y-chain of anchored parts: part p is translated by
// (sum of earlier dist_x, sum of later dist_y); consecutive parts share
// exactly their joining corner.
link_chain link_many_y(std::vector<monomial_ideal> parts)
{
    exponent x_total = 0, y_total = 0;
    for (const auto &p : parts) {
        x_total = checked_add(x_total, dist(p, axis::x));
        y_total = checked_add(y_total, dist(p, axis::y));
    }

    std::vector<monomial> gens;
    std::vector<monomial> points{monomial{0, y_total}};
    exponent xo = 0, yo = y_total;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto &part = parts[p];
        yo -= dist(part, axis::y);
        for (std::size_t g = p == 0 ? 0 : 1; g < part.size(); ++g) {
            gens.push_back({xo + part[g].a, yo + part[g].b});
        }
        xo += dist(part, axis::x);
        points.push_back({xo, yo});
    }
    link_chain chain{std::move(parts), axis::y, std::move(points), monomial_ideal::from_canonical(std::move(gens))};
    return chain;
}

std::size_t generator_index(const monomial_ideal &s, const monomial &h)
{
    auto it = std::lower_bound(s.begin(), s.end(), h);
    if (it == s.end() || *it != h) {
        throw precondition_error("link point is not a minimal generator");
    }
    return static_cast<std::size_t>(it - s.begin());
}

} // namespace

monomial_ideal link(const monomial_ideal &i, const monomial_ideal &j, axis ax)
{
    const monomial_ideal parts[] = {i, j};
    return link_many(parts, ax).ideal;
}

monomial link_point(const monomial_ideal &i, const monomial_ideal &j, axis ax)
{
    if (ax == axis::x) {
        return transpose(link_point(transpose(i), transpose(j), axis::y));
    }
    return {dist(i, axis::x), dist(j, axis::y)};
}

link_chain link_many(std::span<const monomial_ideal> parts, axis ax)
{
    if (parts.empty()) {
        throw precondition_error("link_many requires at least one part");
    }
    std::vector<monomial_ideal> anchored;
    anchored.reserve(parts.size());
    for (const auto &p : parts) {
        anchored.push_back(anchor(p).ideal);
    }
    if (ax == axis::y) {
        return link_many_y(std::move(anchored));
    }
    auto chain = link_many_y(transposed(anchored));
    chain.ax = axis::x;
    chain.parts = std::move(anchored);
    chain.ideal = transpose(chain.ideal);
    for (auto &h : chain.points) {
        h = transpose(h);
    }
    return chain;
}

std::vector<monomial_ideal> unlink(const monomial_ideal &s, std::span<const monomial> link_points, axis ax)
{
    if (!is_anchored(s)) {
        throw precondition_error("unlink requires an anchored ideal");
    }
    if (ax == axis::x) {
        std::vector<monomial> pts;
        for (const auto &h : link_points) {
            pts.push_back(transpose(h));
        }
        return transposed(unlink(transpose(s), pts, axis::y));
    }
    std::vector<monomial> h{s.front()};
    std::size_t last = 0;
    for (const auto &p : link_points) {
        const auto idx = generator_index(s, p);
        // Equal consecutive points describe a unit part.
        if (idx < last) {
            throw precondition_error("link points must be descending in y");
        }
        last = idx;
        h.push_back(p);
    }
    h.push_back(s.back());
    std::vector<monomial_ideal> parts;
    parts.reserve(h.size() - 1);
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        parts.push_back(colon_monomial(s, gcd(h[i], h[i + 1])));
    }
    return parts;
}

} // namespace monpow
