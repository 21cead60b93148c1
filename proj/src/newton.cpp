#include <monpow/newton.hpp>

#include <algorithm>
#include <string>

namespace monpow
{

namespace
{

constexpr exponent hull_coord_limit = exponent(1) << 62;

void require_antichain_pair(const monomial &g, const monomial &h)
{
    if (divides(g, h) || divides(h, g)) {
        throw precondition_error("generator pair is comparable");
    }
}

void require_principal_free(const monomial_ideal &i)
{
    if (i.is_principal()) {
        throw principal_ideal_error();
    }
}

__extension__ using wide = __int128;

// Orientation of (o, p, q); exact for coordinates below 2^62.
wide cross(const monomial &o, const monomial &p, const monomial &q)
{
    const auto dx1 = static_cast<wide>(p.a) - static_cast<wide>(o.a);
    const auto dy1 = static_cast<wide>(p.b) - static_cast<wide>(o.b);
    const auto dx2 = static_cast<wide>(q.a) - static_cast<wide>(o.a);
    const auto dy2 = static_cast<wide>(q.b) - static_cast<wide>(o.b);
    return dx1 * dy2 - dy1 * dx2;
}

} // namespace

bool lies_between(const monomial &f, const monomial &g, const monomial &h) noexcept
{
    return std::min(g.a, h.a) < f.a && std::min(g.b, h.b) < f.b;
}

exponent weighted_deg(const monomial &g, const monomial &h, const monomial &f)
{
    require_antichain_pair(g, h);
    const auto base = gcd(g, h);
    if (!divides(base, f)) {
        throw precondition_error("weighted_deg: gcd(g, h) does not divide f");
    }
    const auto rel = f / base;
    return checked_add(checked_mul(rel.a, pair_dist(g, h, axis::y)), checked_mul(rel.b, pair_dist(g, h, axis::x)));
}

exponent wdd(const monomial &g, const monomial &h)
{
    return weighted_deg(g, h, g);
}

closure_class in_closure_pair(const monomial &f, const monomial &g, const monomial &h)
{
    if (!lies_between(f, g, h)) {
        throw precondition_error("in_closure_pair: f does not lie between g and h");
    }
    const auto w = weighted_deg(g, h, f);
    const auto t = wdd(g, h);
    return w > t ? closure_class::inside : (w == t ? closure_class::boundary : closure_class::outside);
}

power_relation power_relation_witness(const monomial &f, const monomial &g, const monomial &h, axis ax)
{
    if (divides(g, f) || divides(h, f)) {
        throw precondition_error("power_relation_witness: f lies in (g, h)");
    }
    const auto cls = in_closure_pair(f, g, h);
    const exponent n = pair_dist(g, h, ax);
    const exponent alpha = pair_dist(f, h, ax);
    const auto fn = pow(f, n);
    const auto mix = pow(g, alpha) * pow(h, n - alpha);
    power_relation rel{cls != closure_class::outside, n, alpha, fn == mix};
    const bool holds = rel.in_closure ? divides(mix, fn) : divides(fn, mix);
    if (!holds || rel.exact != (cls == closure_class::boundary)) {
        throw invariant_error("power_relation_witness: divisibility check failed");
    }
    return rel;
}

std::vector<monomial> persistent_generators(const monomial_ideal &i)
{
    require_principal_free(i);
    if (i.front().b >= hull_coord_limit || i.back().a >= hull_coord_limit) {
        throw overflow_error("exponents too large for hull computation");
    }
    std::vector<monomial> hull;
    for (const auto &p : i) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    return hull;
}

std::vector<monomial> weakly_persistent_generators(const monomial_ideal &i)
{
    const auto p = persistent_generators(i);
    std::vector<monomial> out;
    std::size_t edge = 0;
    for (const auto &f : i) {
        if (edge < p.size() && f == p[edge]) {
            out.push_back(f);
            ++edge;
            continue;
        }
        // f sits strictly between p[edge - 1] and p[edge] in canonical order.
        if (in_closure_pair(f, p[edge - 1], p[edge]) == closure_class::boundary) {
            out.push_back(f);
        }
    }
    return out;
}

persistence_profile compute_profile(const monomial_ideal &i, std::optional<std::vector<monomial>> chosen)
{
    persistence_profile prof;
    prof.persistent = persistent_generators(i);
    prof.weakly_persistent = weakly_persistent_generators(i);
    if (chosen) {
        const auto &c = *chosen;
        if (!is_canonical(c)) {
            throw precondition_error("chosen generators must be in canonical order");
        }
        if (!std::includes(prof.weakly_persistent.begin(), prof.weakly_persistent.end(), c.begin(), c.end())
            || !std::includes(c.begin(), c.end(), prof.persistent.begin(), prof.persistent.end())) {
            throw precondition_error("chosen generators must contain P(I) and lie inside P*(I)");
        }
        prof.chosen = c;
    } else {
        prof.chosen = prof.persistent;
    }

    const auto &c = prof.chosen;
    exponent widest = 0;
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        widest = std::max(widest, std::min(pair_dist(c[j], c[j + 1], axis::x), pair_dist(c[j], c[j + 1], axis::y)));
    }
    prof.delta = widest - 1;
    prof.d = c.size() > 2 ? std::min(dist(i, axis::x), dist(i, axis::y)) - 2 : 0;
    const exponent size_p = c.size();
    prof.big_d = checked_add(checked_mul(i.size() - size_p, prof.delta), checked_mul(size_p, prof.d));
    return prof;
}

} // namespace monpow
