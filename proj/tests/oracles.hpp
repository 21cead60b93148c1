// Brute-force references used only by the tests. Deliberately naive and
// independent of the library's sweep-based algorithms.
#ifndef MONPOW_TESTS_ORACLES_HPP
#define MONPOW_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <monpow/ideal.hpp>

namespace oracle
{

using monpow::exponent;
using monpow::monomial;
using pts = std::vector<monomial>;

inline bool brute_divides(const monomial &m, const monomial &f)
{
    return m.a <= f.a && m.b <= f.b;
}

// Quadratic divisibility filter; result sorted by x.
inline pts minimal(const pts &cands)
{
    std::set<monomial> uniq(cands.begin(), cands.end());
    pts out;
    for (const auto &f : uniq) {
        bool dominated = false;
        for (const auto &g : uniq) {
            if (g != f && brute_divides(g, f)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            out.push_back(f);
        }
    }
    return out;
}

inline pts product(const pts &i, const pts &j)
{
    pts c;
    for (const auto &f : i) {
        for (const auto &g : j) {
            c.push_back({f.a + g.a, f.b + g.b});
        }
    }
    return minimal(c);
}

inline pts power(const pts &i, exponent n)
{
    pts acc{{0, 0}};
    for (exponent k = 0; k < n; ++k) {
        acc = product(acc, i);
    }
    return acc;
}

inline pts gens(const monpow::monomial_ideal &i)
{
    return {i.begin(), i.end()};
}

inline pts shifted(const pts &i, monomial m)
{
    pts out;
    for (const auto &f : i) {
        out.push_back({f.a + m.a, f.b + m.b});
    }
    return out;
}

inline pts anchored(const pts &i)
{
    exponent ma = i[0].a, mb = i[0].b;
    for (const auto &f : i) {
        ma = std::min(ma, f.a);
        mb = std::min(mb, f.b);
    }
    pts out;
    for (const auto &f : i) {
        out.push_back({f.a - ma, f.b - mb});
    }
    return minimal(out);
}

inline exponent dist_x(const pts &i)
{
    exponent lo = i[0].a, hi = i[0].a;
    for (const auto &f : i) {
        lo = std::min(lo, f.a);
        hi = std::max(hi, f.a);
    }
    return hi - lo;
}

inline exponent dist_y(const pts &i)
{
    exponent lo = i[0].b, hi = i[0].b;
    for (const auto &f : i) {
        lo = std::min(lo, f.b);
        hi = std::max(hi, f.b);
    }
    return hi - lo;
}

// Link along y straight from its definition.
inline pts link_y(const pts &i, const pts &j)
{
    auto ai = anchored(i), aj = anchored(j);
    auto u = shifted(ai, {0, dist_y(aj)});
    auto v = shifted(aj, {dist_x(ai), 0});
    u.insert(u.end(), v.begin(), v.end());
    return minimal(u);
}

// f in ic(g, h) iff f^n in (g, h)^n for some n; searched up to n_max.
inline bool in_pair_closure(const monomial &f, const monomial &g, const monomial &h, exponent n_max = 64)
{
    for (exponent n = 1; n <= n_max; ++n) {
        for (exponent j = 0; j <= n; ++j) {
            const monomial m{g.a * j + h.a * (n - j), g.b * j + h.b * (n - j)};
            if (brute_divides(m, {f.a * n, f.b * n})) {
                return true;
            }
        }
    }
    return false;
}

// Persistent generators by definition: outside every two-generated closure
// formed by other minimal generators.
inline pts persistent(const pts &g)
{
    pts out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool inside = false;
        for (std::size_t p = 0; p < g.size() && !inside; ++p) {
            for (std::size_t q = p + 1; q < g.size() && !inside; ++q) {
                if (p != i && q != i && in_pair_closure(g[i], g[p], g[q])) {
                    inside = true;
                }
            }
        }
        if (!inside) {
            out.push_back(g[i]);
        }
    }
    return out;
}

// Random antichain, independent of the library's generator.
inline pts random_gens(std::mt19937_64 &rng, std::size_t mu_max, exponent exp_max)
{
    std::uniform_int_distribution<std::size_t> count(2, mu_max);
    std::uniform_int_distribution<exponent> coord(0, exp_max);
    pts m;
    do {
        pts c;
        const auto want = count(rng);
        for (std::size_t k = 0; k < 3 * want; ++k) {
            c.push_back({coord(rng), coord(rng)});
        }
        m = minimal(c);
    } while (m.size() < 2);
    return m;
}

inline monpow::monomial_ideal ideal(const pts &p)
{
    return monpow::monomial_ideal::from_canonical(p);
}

} // namespace oracle

#endif
