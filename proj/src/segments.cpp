#include <monpow/segments.hpp>

#include <algorithm>

#include <monpow/link.hpp>

namespace monpow
{

namespace
{

// Index of the generator of least y-degree among those with y >= bound.
std::size_t lowest_at_or_above(const monomial_ideal &s, exponent bound)
{
    // y-degrees descend along the canonical order.
    auto it = std::partition_point(s.begin(), s.end(), [bound](const monomial &f) { return f.b >= bound; });
    if (it == s.begin()) {
        throw invariant_error("no generator at or above the y-threshold");
    }
    return static_cast<std::size_t>(it - s.begin()) - 1;
}

void require_chain(std::span<const monomial> gs)
{
    if (gs.size() < 2 || !is_canonical(gs)) {
        throw precondition_error("boundary generators must form a canonical chain of length >= 2");
    }
    if (gs.front().a != 0 || gs.back().b != 0) {
        throw precondition_error("boundary generators must be anchored");
    }
}

} // namespace

exponent minimal_r(std::span<const monomial> gs, const monomial_ideal &j)
{
    require_chain(gs);
    exponent r = 0;
    for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
        r = std::max(r, ceil_div(dist(j, axis::y), pair_dist(gs[i], gs[i + 1], axis::y)));
    }
    return r;
}

segment_triple r_segments(exponent u, exponent v, const monomial_ideal &j, exponent r)
{
    if (u == 0 || v == 0) {
        throw precondition_error("r_segments requires u, v >= 1");
    }
    if (!is_anchored(j)) {
        throw precondition_error("r_segments requires an anchored J");
    }
    if (r < ceil_div(dist(j, axis::y), v)) {
        throw precondition_error("r below ceil(dist_y(J) / v)");
    }
    segment_triple t;
    t.u = u;
    t.v = v;
    t.r = r;
    t.base = staircase_product({0, v}, {u, 0}, checked_add(r, 1), j);
    const auto &s = t.base;
    const exponent rv = checked_mul(r, v);
    const exponent top = checked_add(rv, v);
    const auto &g = s[lowest_at_or_above(s, rv)];
    t.alpha = g.a;
    t.beta = g.b;
    if (t.alpha < u || t.beta >= top || t.alpha > checked_mul(r + 1, u)) {
        throw invariant_error("pivot generator outside its admissible box");
    }
    t.middle_count = static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [&](const monomial &f) { return f.b >= rv && f.b < top; }));
    if (t.middle_count == 0) {
        throw invariant_error("empty middle band");
    }
    t.a = colon_monomial(s, {0, t.beta});
    t.h = colon_monomial(s, {t.alpha - u, t.beta});
    t.b = colon_monomial(s, {t.alpha, 0});
    return t;
}

monomial_ideal one_segment_power(const segment_triple &t, exponent ell)
{
    std::vector<monomial_ideal> parts;
    parts.reserve(static_cast<std::size_t>(ell) + 2);
    parts.push_back(t.a);
    for (exponent j = 0; j < ell; ++j) {
        parts.push_back(t.h);
    }
    parts.push_back(t.b);
    return link_many(parts, axis::y).ideal;
}

std::vector<monomial> band_union(const segment_triple &t, exponent ell)
{
    const exponent rv = t.r * t.v, top = rv + t.v;
    std::vector<monomial> l, m, rr;
    for (const auto &f : t.base) {
        (f.b >= top ? l : (f.b >= rv ? m : rr)).push_back(f);
    }
    // L as defined includes the middle band: deg_y >= rv.
    l.insert(l.end(), m.begin(), m.end());
    std::vector<monomial> out;
    for (const auto &f : l) {
        out.push_back(f * monomial{0, checked_mul(t.v, ell)});
    }
    for (exponent j = 1; j <= ell; ++j) {
        const monomial sh{checked_mul(t.u, j), checked_mul(t.v, ell - j)};
        for (const auto &f : m) {
            out.push_back(f * sh);
        }
    }
    for (const auto &f : rr) {
        out.push_back(f * monomial{checked_mul(t.u, ell), 0});
    }
    std::vector<monomial> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw invariant_error("band union pieces overlap");
    }
    if (!is_canonical(sorted)) {
        throw invariant_error("band union is not an antichain");
    }
    return sorted;
}

glued_components glue_components(std::span<const monomial> gs, const monomial_ideal &j, exponent r,
                                 std::stop_token stop)
{
    if (!is_anchored(j)) {
        throw precondition_error("glue_components requires an anchored J");
    }
    if (r < minimal_r(gs, j)) {
        throw precondition_error("r below ceil(max dist_y(J) / v_i)");
    }
    std::vector<monomial> all;
    for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
        const auto part = staircase_product(gs[i], gs[i + 1], checked_add(r, 1), j, stop);
        all.insert(all.end(), part.begin(), part.end());
    }
    return glue_components_from_base(minimalize(std::move(all)), gs, r);
}

glued_components glue_components_from_base(monomial_ideal s, std::span<const monomial> gs, exponent r)
{
    require_chain(gs);
    if (!is_anchored(s)) {
        throw precondition_error("glue_components requires an anchored S");
    }
    glued_components comp;
    comp.gs.assign(gs.begin(), gs.end());
    comp.r = r;
    const std::size_t k = gs.size() - 1;

    std::vector<std::size_t> idx{0};
    for (std::size_t i = 0; i < k; ++i) {
        const exponent vi = pair_dist(gs[i], gs[i + 1], axis::y);
        const exponent bound = checked_add(checked_mul(r, vi), checked_mul(checked_add(r, 1), gs[i + 1].b));
        idx.push_back(lowest_at_or_above(s, bound));
        if (idx.back() < idx[idx.size() - 2]) {
            throw invariant_error("link points out of order");
        }
    }
    idx.push_back(s.size() - 1);
    if (idx[k] > idx[k + 1]) {
        throw invariant_error("link points out of order");
    }

    for (auto i : idx) {
        comp.points.push_back(s[i]);
    }
    for (std::size_t i = 0; i <= k; ++i) {
        std::vector<monomial> slice(s.begin() + static_cast<std::ptrdiff_t>(idx[i]),
                                    s.begin() + static_cast<std::ptrdiff_t>(idx[i + 1]) + 1);
        comp.c.push_back(anchor(monomial_ideal::from_canonical(std::move(slice))).ideal);
    }
    for (std::size_t i = 1; i <= k; ++i) {
        const exponent ui = pair_dist(gs[i - 1], gs[i], axis::x);
        const auto &hi = comp.points[i];
        if (hi.a < ui) {
            throw invariant_error("link point left of its segment width");
        }
        comp.h.push_back(colon_monomial(s, {hi.a - ui, hi.b}));
    }
    comp.base = std::move(s);
    if (glued_power(comp, 0) != comp.base) {
        throw invariant_error("components do not reassemble the base ideal");
    }
    return comp;
}

monomial_ideal glued_power(const glued_components &comp, exponent ell, axis ax)
{
    std::vector<monomial_ideal> parts{comp.c[0]};
    for (std::size_t i = 0; i < comp.k(); ++i) {
        for (exponent j = 0; j < ell; ++j) {
            parts.push_back(comp.h[i]);
        }
        parts.push_back(comp.c[i + 1]);
    }
    return link_many(parts, ax).ideal;
}

} // namespace monpow
