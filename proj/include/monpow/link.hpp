#ifndef MONPOW_LINK_HPP
#define MONPOW_LINK_HPP

#include <span>
#include <vector>

#include <monpow/ideal.hpp>

namespace monpow
{

// I ⊙ J with respect to ax. For Y: Ĩ y^{dist_y J} + J̃ x^{dist_x I}.
monomial_ideal link(const monomial_ideal &i, const monomial_ideal &j, axis ax = axis::y);
monomial link_point(const monomial_ideal &i, const monomial_ideal &j, axis ax = axis::y);

struct link_chain {
    std::vector<monomial_ideal> parts; // anchored J_0..J_k
    axis ax = axis::y;
    std::vector<monomial> points;      // h_0..h_{k+1}, sentinels included
    monomial_ideal ideal;              // J_0 ⊙ ... ⊙ J_k

    // h_1..h_k.
    std::span<const monomial> link_points() const noexcept
    {
        return std::span<const monomial>(points).subspan(1, points.size() - 2);
    }
};

link_chain link_many(std::span<const monomial_ideal> parts, axis ax = axis::y);

// J_i = S : gcd(h_i, h_{i+1}) for the inner points h_1..h_k of an anchored S.
std::vector<monomial_ideal> unlink(const monomial_ideal &s, std::span<const monomial> link_points,
                                   axis ax = axis::y);

} // namespace monpow

#endif
