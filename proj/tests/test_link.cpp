#include <doctest.h>

#include <random>

#include <monpow/link.hpp>

#include "oracles.hpp"

using namespace monpow;

namespace
{

const monomial_ideal left_i{{0, 3}, {1, 1}, {4, 0}};
const monomial_ideal right_j{{0, 2}, {2, 0}};
const monomial_ideal small{{0, 2}, {2, 1}, {3, 0}};

} // namespace

TEST_CASE("link examples")
{
    const auto l = link(left_i, right_j);
    CHECK(l == monomial_ideal{{0, 5}, {1, 3}, {4, 2}, {6, 0}});
    CHECK(l.size() == left_i.size() + right_j.size() - 1);
    CHECK(link(left_i, monomial_ideal{}) == left_i);
    CHECK(link(monomial_ideal{}, left_i) == left_i);
    // Inputs are anchored first.
    CHECK(link(shift(left_i, {3, 1}), shift(right_j, {0, 9})) == l);
}

TEST_CASE("link points")
{
    CHECK(link_point(left_i, right_j) == monomial{4, 2});
    CHECK(link_point(left_i, right_j, axis::x) == link_point(right_j, left_i, axis::y));
    CHECK(link(left_i, right_j, axis::x) == link(right_j, left_i, axis::y));
    CHECK(link_point(small, small) == monomial{3, 2});
}

TEST_CASE("link_many")
{
    const monomial_ideal parts2[] = {small, small};
    CHECK(link_many(parts2).ideal.size() == 5);
    const monomial_ideal parts3[] = {small, small, small};
    const auto c3 = link_many(parts3);
    CHECK(c3.ideal.size() == 7);
    CHECK(c3.link_points().size() == 2);
    CHECK(c3.points.front() == monomial{0, 6});
    CHECK(c3.points.back() == monomial{9, 0});

    const monomial_ideal one[] = {shift(small, {2, 2})};
    const auto c1 = link_many(one);
    CHECK(c1.ideal == small);
    CHECK(c1.link_points().empty());

    // The small-example chain C_0 ⊙ H^ℓ ⊙ C_1 grows by two per copy.
    const monomial_ideal c0{{0, 4}, {2, 3}, {3, 2}, {5, 1}, {6, 0}};
    for (exponent ell = 0; ell <= 6; ++ell) {
        std::vector<monomial_ideal> parts{c0};
        for (exponent j = 0; j < ell; ++j) {
            parts.push_back(small);
        }
        parts.push_back(small);
        CHECK(link_many(parts).ideal.size() == 7 + 2 * ell);
        CHECK(link_many(parts).ideal == naive_power(small, 3 + ell));
    }
}

TEST_CASE("unlink examples")
{
    const auto s = naive_power(small, 3);
    const monomial h1[] = {{6, 2}};
    const auto parts = unlink(s, h1);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == monomial_ideal{{0, 4}, {2, 3}, {3, 2}, {5, 1}, {6, 0}});
    CHECK(parts[1] == small);

    CHECK(unlink(s, {}) == std::vector<monomial_ideal>{s});

    const monomial lp[] = {{4, 2}};
    const auto back = unlink(link(left_i, right_j), lp);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == left_i);
    CHECK(back[1] == right_j);

    const monomial bad[] = {{5, 2}};
    CHECK_THROWS_AS(unlink(s, bad), precondition_error);
    CHECK_THROWS_AS(unlink(shift(s, {1, 0}), h1), precondition_error);
}

TEST_CASE("link properties on random ideals")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const auto pa = oracle::random_gens(rng, 8, 15), pb = oracle::random_gens(rng, 8, 15),
                   pc = oracle::random_gens(rng, 8, 15);
        const auto a = oracle::ideal(pa), b = oracle::ideal(pb), c = oracle::ideal(pc);
        const auto ab = link(a, b);
        CHECK(oracle::gens(ab) == oracle::link_y(pa, pb));
        CHECK(ab.size() == a.size() + b.size() - 1);
        CHECK(link(ab, c) == link(a, link(b, c)));
        CHECK(link(a, b, axis::x) == link(b, a, axis::y));

        // The two shifted pieces meet exactly at the link point.
        const auto h = link_point(a, b);
        CHECK(std::binary_search(ab.begin(), ab.end(), h));
        const auto ua = shift(anchor(a).ideal, {0, dist(b, axis::y)});
        const auto ub = shift(anchor(b).ideal, {dist(a, axis::x), 0});
        std::vector<monomial> common;
        std::set_intersection(ua.begin(), ua.end(), ub.begin(), ub.end(), std::back_inserter(common));
        CHECK(common == std::vector<monomial>{h});

        for (auto ax : {axis::x, axis::y}) {
            const monomial_ideal parts[] = {a, b, c};
            const auto chain = link_many(parts, ax);
            const auto back = unlink(chain.ideal, chain.link_points(), ax);
            REQUIRE(back.size() == 3);
            CHECK(back[0] == anchor(a).ideal);
            CHECK(back[1] == anchor(b).ideal);
            CHECK(back[2] == anchor(c).ideal);
        }
    }
}

TEST_CASE("unit parts yield repeated link points")
{
    const monomial_ideal parts[] = {small, monomial_ideal{}};
    const auto chain = link_many(parts);
    CHECK(chain.ideal == small);
    const auto back = unlink(chain.ideal, chain.link_points());
    REQUIRE(back.size() == 2);
    CHECK(back[1].is_unit());
}
