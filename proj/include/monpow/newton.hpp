#ifndef MONPOW_NEWTON_HPP
#define MONPOW_NEWTON_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <monpow/ideal.hpp>

namespace monpow
{

// Both strict inequalities min(deg g, deg h) < deg f, on x and on y.
bool lies_between(const monomial &f, const monomial &g, const monomial &h) noexcept;

// The grading deg_{g,h}, measured from gcd(g, h). Requires g, h incomparable
// and gcd(g, h) | f.
exponent weighted_deg(const monomial &g, const monomial &h, const monomial &f);
exponent wdd(const monomial &g, const monomial &h);

enum class closure_class { outside, boundary, inside };

// Position of f relative to the integral closure of (g, h). Requires
// lies_between(f, g, h).
closure_class in_closure_pair(const monomial &f, const monomial &g, const monomial &h);

struct power_relation {
    // true: g^alpha h^(n-alpha) | f^n; false: f^n | g^alpha h^(n-alpha).
    bool in_closure;
    exponent n;
    exponent alpha;
    // The two sides are equal (f on the segment).
    bool exact;
};

// Computes and verifies the divisibility relation between f^n and
// g^alpha h^(n-alpha) with n = dist_ax(g, h), alpha = dist_ax(f, h).
// Requires lies_between(f, g, h) and f outside (g, h).
power_relation power_relation_witness(const monomial &f, const monomial &g, const monomial &h, axis ax);

// Corners of the Newton polyhedron, in canonical order.
std::vector<monomial> persistent_generators(const monomial_ideal &i);
// Corners plus generators lying on a compact edge.
std::vector<monomial> weakly_persistent_generators(const monomial_ideal &i);

struct persistence_profile {
    std::vector<monomial> persistent;
    std::vector<monomial> weakly_persistent;
    std::vector<monomial> chosen;
    exponent delta = 0;
    exponent d = 0;
    exponent big_d = 0;

    // Number of consecutive pairs in the chosen sequence.
    std::size_t k() const noexcept
    {
        return chosen.size() - 1;
    }
};

// chosen defaults to the persistent generators; otherwise it must sit
// between P(I) and P*(I), in canonical order.
persistence_profile compute_profile(const monomial_ideal &i, std::optional<std::vector<monomial>> chosen = {});

} // namespace monpow

#endif
