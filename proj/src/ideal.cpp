#include <monpow/ideal.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>

namespace monpow
{

namespace
{

// Dense sweep budget: column arrays beyond this many cells fall back to sorting.
constexpr exponent dense_cell_limit = exponent(1) << 24;

// Input sorted by (a, b) ascending: the first point of each column has the
// least b, and it is minimal iff its b beats everything to its left.
std::vector<monomial> sweep_sorted(const std::vector<monomial> &pts)
{
    std::vector<monomial> out;
    out.reserve(pts.size());
    for (const auto &p : pts) {
        if (out.empty() || p.b < out.back().b) {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace

bool is_canonical(std::span<const monomial> gens) noexcept
{
    if (gens.empty()) {
        return false;
    }
    for (std::size_t i = 1; i < gens.size(); ++i) {
        if (!(gens[i - 1].a < gens[i].a && gens[i - 1].b > gens[i].b)) {
            return false;
        }
    }
    return true;
}

monomial_ideal::monomial_ideal(std::vector<monomial> candidates) : m_gens(minimalize(std::move(candidates)).m_gens) {}

monomial_ideal monomial_ideal::from_canonical(std::vector<monomial> gens)
{
    if (!is_canonical(gens)) {
        throw precondition_error("generator sequence is not in canonical order");
    }
    return monomial_ideal(adopt_tag{}, std::move(gens));
}

bool monomial_ideal::contains(const monomial &f) const noexcept
{
    // Generators with a <= f.a form a prefix; the last of them has the least b.
    auto it = std::upper_bound(m_gens.begin(), m_gens.end(), f.a,
                               [](exponent a, const monomial &g) { return a < g.a; });
    if (it == m_gens.begin()) {
        return false;
    }
    return std::prev(it)->b <= f.b;
}

monomial_ideal minimalize(std::vector<monomial> candidates)
{
    if (candidates.empty()) {
        throw precondition_error("minimalize of an empty candidate set");
    }
    std::sort(candidates.begin(), candidates.end());
    return monomial_ideal::from_canonical(sweep_sorted(candidates));
}

monomial_ideal multiply(const monomial_ideal &i, const monomial_ideal &j)
{
    std::vector<monomial> prods;
    prods.reserve(i.size() * j.size());
    for (const auto &f : i) {
        for (const auto &g : j) {
            prods.push_back(f * g);
        }
    }
    return minimalize(std::move(prods));
}

monomial_ideal sum(const monomial_ideal &i, const monomial_ideal &j)
{
    std::vector<monomial> all(i.begin(), i.end());
    all.insert(all.end(), j.begin(), j.end());
    return minimalize(std::move(all));
}

monomial_ideal naive_power(const monomial_ideal &i, exponent n, std::stop_token stop)
{
    if (n == 0) {
        throw precondition_error("naive_power requires n >= 1");
    }
    monomial_ideal acc = i;
    for (exponent k = 1; k < n; ++k) {
        throw_if_stopped(stop);
        acc = multiply(acc, i);
    }
    return acc;
}

monomial_ideal colon_monomial(const monomial_ideal &i, const monomial &m)
{
    std::vector<monomial> q;
    q.reserve(i.size());
    for (const auto &f : i) {
        q.push_back(colon(f, m));
    }
    return minimalize(std::move(q));
}

monomial gcd_of(const monomial_ideal &i) noexcept
{
    // Canonical order puts the minimal a first and the minimal b last.
    return {i.front().a, i.back().b};
}

anchored_ideal anchor(const monomial_ideal &i)
{
    const auto g = gcd_of(i);
    std::vector<monomial> gens;
    gens.reserve(i.size());
    for (const auto &f : i) {
        gens.push_back(f / g);
    }
    return {monomial_ideal::from_canonical(std::move(gens)), g};
}

bool is_anchored(const monomial_ideal &i) noexcept
{
    return gcd_of(i) == monomial{};
}

exponent dist(const monomial_ideal &i, axis ax) noexcept
{
    return ax == axis::x ? i.back().a - i.front().a : i.front().b - i.back().b;
}

monomial_ideal shift(const monomial_ideal &i, const monomial &m)
{
    std::vector<monomial> gens;
    gens.reserve(i.size());
    for (const auto &f : i) {
        gens.push_back(f * m);
    }
    return monomial_ideal::from_canonical(std::move(gens));
}

monomial_ideal transpose(const monomial_ideal &i)
{
    std::vector<monomial> gens;
    gens.reserve(i.size());
    for (auto it = i.gens().rbegin(); it != i.gens().rend(); ++it) {
        gens.push_back(transpose(*it));
    }
    return monomial_ideal::from_canonical(std::move(gens));
}

std::vector<monomial> two_generator_power(const monomial &g, const monomial &h, exponent m)
{
    if (divides(g, h) || divides(h, g)) {
        throw precondition_error("two_generator_power requires incomparable generators");
    }
    // Order so that the left generator has the smaller x-degree.
    const auto &l = g.a < h.a ? g : h;
    const auto &r = g.a < h.a ? h : g;
    std::vector<monomial> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    for (exponent j = 0; j <= m; ++j) {
        out.push_back(pow(l, m - j) * pow(r, j));
    }
    return out;
}

monomial_ideal staircase_product(const monomial &g, const monomial &h, exponent m, const monomial_ideal &j,
                                 std::stop_token stop)
{
    const auto stair = two_generator_power(g, h, m);
    const exponent lo = checked_add(stair.front().a, j.front().a);
    const exponent hi = checked_add(stair.back().a, j.back().a);
    const exponent width = hi - lo + 1;
    const exponent count = checked_mul(static_cast<exponent>(stair.size()), static_cast<exponent>(j.size()));

    if (width <= dense_cell_limit && width <= 8 * count + 4096) {
        constexpr auto none = std::numeric_limits<exponent>::max();
        std::vector<exponent> col(static_cast<std::size_t>(width), none);
        for (const auto &f : j) {
            throw_if_stopped(stop);
            for (const auto &s : stair) {
                const auto p = s * f;
                auto &c = col[static_cast<std::size_t>(p.a - lo)];
                c = std::min(c, p.b);
            }
        }
        std::vector<monomial> out;
        for (std::size_t c = 0; c < col.size(); ++c) {
            if (col[c] != none && (out.empty() || col[c] < out.back().b)) {
                out.push_back({lo + c, col[c]});
            }
        }
        return monomial_ideal::from_canonical(std::move(out));
    }

    std::vector<monomial> cands;
    cands.reserve(static_cast<std::size_t>(count));
    for (const auto &f : j) {
        throw_if_stopped(stop);
        for (const auto &s : stair) {
            cands.push_back(s * f);
        }
    }
    return minimalize(std::move(cands));
}

std::ostream &operator<<(std::ostream &os, const monomial_ideal &i)
{
    os << '[';
    for (std::size_t k = 0; k < i.size(); ++k) {
        os << (k ? "," : "") << i[k];
    }
    return os << ']';
}

} // namespace monpow
