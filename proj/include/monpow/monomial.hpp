#ifndef MONPOW_MONOMIAL_HPP
#define MONPOW_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>

#include <monpow/errors.hpp>

namespace monpow
{

using exponent = std::uint64_t;

inline exponent checked_add(exponent a, exponent b)
{
    exponent r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error("exponent overflow in addition");
    }
    return r;
}

inline exponent checked_mul(exponent a, exponent b)
{
    exponent r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error("exponent overflow in multiplication");
    }
    return r;
}

// ceil(num / den) for den > 0.
inline exponent ceil_div(exponent num, exponent den)
{
    return num / den + (num % den != 0 ? 1 : 0);
}

enum class axis { x, y };

inline constexpr axis other(axis ax) noexcept
{
    return ax == axis::x ? axis::y : axis::x;
}

inline constexpr char axis_name(axis ax) noexcept
{
    return ax == axis::x ? 'x' : 'y';
}

// The monomial x^a y^b, identified with the lattice point (a, b).
struct monomial {
    exponent a = 0;
    exponent b = 0;

    constexpr exponent deg(axis ax) const noexcept
    {
        return ax == axis::x ? a : b;
    }

    friend constexpr auto operator<=>(const monomial &, const monomial &) = default;
};

inline constexpr bool divides(const monomial &m, const monomial &f) noexcept
{
    return m.a <= f.a && m.b <= f.b;
}

inline monomial operator*(const monomial &m, const monomial &f)
{
    return {checked_add(m.a, f.a), checked_add(m.b, f.b)};
}

inline monomial pow(const monomial &m, exponent n)
{
    return {checked_mul(m.a, n), checked_mul(m.b, n)};
}

// Exact quotient f / m. Requires m | f.
inline monomial operator/(const monomial &f, const monomial &m)
{
    if (!divides(m, f)) {
        throw precondition_error("monomial quotient of non-divisible pair");
    }
    return {f.a - m.a, f.b - m.b};
}

// Generator of (f) : (m), i.e. f / gcd(f, m).
inline constexpr monomial colon(const monomial &f, const monomial &m) noexcept
{
    return {f.a > m.a ? f.a - m.a : 0, f.b > m.b ? f.b - m.b : 0};
}

inline constexpr monomial gcd(const monomial &m, const monomial &f) noexcept
{
    return {m.a < f.a ? m.a : f.a, m.b < f.b ? m.b : f.b};
}

inline constexpr monomial transpose(const monomial &m) noexcept
{
    return {m.b, m.a};
}

// dist_ax of the two-element set {g, h}.
inline constexpr exponent pair_dist(const monomial &g, const monomial &h, axis ax) noexcept
{
    const auto p = g.deg(ax), q = h.deg(ax);
    return p > q ? p - q : q - p;
}

inline std::ostream &operator<<(std::ostream &os, const monomial &m)
{
    return os << '(' << m.a << ',' << m.b << ')';
}

} // namespace monpow

#endif
