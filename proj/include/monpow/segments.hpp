#ifndef MONPOW_SEGMENTS_HPP
#define MONPOW_SEGMENTS_HPP

#include <cstddef>
#include <span>
#include <stop_token>
#include <vector>

#include <monpow/ideal.hpp>

namespace monpow
{

// The r-segments (A, H, B) of (x^u, y^v) J with respect to y.
struct segment_triple {
    monomial_ideal a, h, b;
    exponent u = 0, v = 0, r = 0;
    exponent alpha = 0, beta = 0; // pivot g = x^alpha y^beta
    std::size_t middle_count = 0; // |M|
    monomial_ideal base;          // (x^u, y^v)^{r+1} J
};

// Requires J anchored, u, v >= 1 and r >= ceil(dist_y(J) / v).
segment_triple r_segments(exponent u, exponent v, const monomial_ideal &j, exponent r);

// (x^u, y^v)^{r+1+ell} J as A ⊙ H^{⊙ell} ⊙ B.
monomial_ideal one_segment_power(const segment_triple &t, exponent ell);

// The band union y^{v ell} L ⊎ x^{uj} y^{v(ell-j)} M ⊎ x^{u ell} R built from
// the ell = 0 base, in canonical order. Throws invariant_error when the
// pieces overlap or the union is not an antichain.
std::vector<monomial> band_union(const segment_triple &t, exponent ell);

// Components of S = Σ (g_i, g_{i+1})^{r+1} J, glued along y.
struct glued_components {
    std::vector<monomial> gs;          // g_1..g_{k+1}
    exponent r = 0;
    std::vector<monomial_ideal> c;     // C_0..C_k, anchored
    std::vector<monomial_ideal> h;     // H_1..H_k, anchored
    std::vector<monomial> points;      // h_0..h_{k+1} as generators of S
    monomial_ideal base;               // S

    std::size_t k() const noexcept
    {
        return h.size();
    }
};

// gs: anchored chain in canonical order (g_1 = y^b, g_{k+1} = x^a);
// J anchored; r >= ceil(max_i dist_y(J) / v_i).
glued_components glue_components(std::span<const monomial> gs, const monomial_ideal &j, exponent r,
                                 std::stop_token stop = {});

// Same, from an already computed S.
glued_components glue_components_from_base(monomial_ideal s, std::span<const monomial> gs, exponent r);

// C_0 ⊙ H_1^{⊙ell} ⊙ C_1 ⊙ ... ⊙ H_k^{⊙ell} ⊙ C_k.
monomial_ideal glued_power(const glued_components &comp, exponent ell, axis ax = axis::y);

// Smallest r allowed for the chain gs and the ideal J.
exponent minimal_r(std::span<const monomial> gs, const monomial_ideal &j);

} // namespace monpow

#endif
