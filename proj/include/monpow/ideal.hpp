#ifndef MONPOW_IDEAL_HPP
#define MONPOW_IDEAL_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stop_token>
#include <vector>

#include <monpow/monomial.hpp>

namespace monpow
{

// A monomial ideal in k[x, y], stored as its minimal generating set G(I)
// in canonical order: x-degrees strictly increasing, y-degrees strictly
// decreasing. Values are immutable.
class monomial_ideal
{
public:
    // The unit ideal (1).
    monomial_ideal() : m_gens{monomial{}} {}

    // Minimalizes an arbitrary non-empty candidate set.
    explicit monomial_ideal(std::vector<monomial> candidates);
    monomial_ideal(std::initializer_list<monomial> candidates)
        : monomial_ideal(std::vector<monomial>(candidates))
    {
    }

    // Adopts a sequence already in canonical order. Throws precondition_error
    // when it is not.
    static monomial_ideal from_canonical(std::vector<monomial> gens);

    std::span<const monomial> gens() const noexcept
    {
        return m_gens;
    }
    std::size_t size() const noexcept
    {
        return m_gens.size();
    }
    const monomial &operator[](std::size_t i) const noexcept
    {
        return m_gens[i];
    }
    const monomial &front() const noexcept
    {
        return m_gens.front();
    }
    const monomial &back() const noexcept
    {
        return m_gens.back();
    }
    auto begin() const noexcept
    {
        return m_gens.begin();
    }
    auto end() const noexcept
    {
        return m_gens.end();
    }
    bool is_principal() const noexcept
    {
        return m_gens.size() == 1;
    }
    bool is_unit() const noexcept
    {
        return is_principal() && m_gens.front() == monomial{};
    }

    // Membership: some generator divides f.
    bool contains(const monomial &f) const noexcept;

    friend bool operator==(const monomial_ideal &, const monomial_ideal &) = default;

private:
    struct adopt_tag {};
    monomial_ideal(adopt_tag, std::vector<monomial> gens) : m_gens(std::move(gens)) {}

    std::vector<monomial> m_gens;
};

// True when the sequence is strictly increasing in a and strictly decreasing in b.
bool is_canonical(std::span<const monomial> gens) noexcept;

monomial_ideal minimalize(std::vector<monomial> candidates);

monomial_ideal multiply(const monomial_ideal &i, const monomial_ideal &j);
monomial_ideal sum(const monomial_ideal &i, const monomial_ideal &j);
monomial_ideal naive_power(const monomial_ideal &i, exponent n, std::stop_token stop = {});
monomial_ideal colon_monomial(const monomial_ideal &i, const monomial &m);
monomial gcd_of(const monomial_ideal &i) noexcept;

struct anchored_ideal {
    monomial_ideal ideal;
    monomial shift;
};
anchored_ideal anchor(const monomial_ideal &i);
bool is_anchored(const monomial_ideal &i) noexcept;

exponent dist(const monomial_ideal &i, axis ax) noexcept;

// m * I.
monomial_ideal shift(const monomial_ideal &i, const monomial &m);
// Swaps the roles of x and y.
monomial_ideal transpose(const monomial_ideal &i);

// G((g, h)^m), listed in canonical order. Requires g, h incomparable.
std::vector<monomial> two_generator_power(const monomial &g, const monomial &h, exponent m);

// G((g, h)^m * J). Skips the generic product when the x-range is small
// enough for a dense column sweep.
monomial_ideal staircase_product(const monomial &g, const monomial &h, exponent m, const monomial_ideal &j,
                                 std::stop_token stop = {});

inline monomial_ideal operator*(const monomial_ideal &i, const monomial_ideal &j)
{
    return multiply(i, j);
}
inline monomial_ideal operator+(const monomial_ideal &i, const monomial_ideal &j)
{
    return sum(i, j);
}
inline monomial_ideal operator*(const monomial &m, const monomial_ideal &i)
{
    return shift(i, m);
}

std::ostream &operator<<(std::ostream &os, const monomial_ideal &i);

inline void throw_if_stopped(const std::stop_token &stop)
{
    if (stop.stop_requested()) {
        throw cancelled_error();
    }
}

} // namespace monpow

#endif
