#include <doctest.h>

#include <sstream>

#include <monpow/oracle.hpp>

#include "oracles.hpp"

using namespace monpow;

TEST_CASE("random ideals are deterministic and well formed")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const random_ideal_spec spec{8, 20, seed};
        const auto a = random_ideal(spec);
        CHECK(a == random_ideal(spec));
        CHECK(a.size() >= 2);
        CHECK(a.size() <= 8);
        CHECK(is_canonical(a.gens()));
        for (const auto &g : a) {
            CHECK(g.a <= 20);
            CHECK(g.b <= 20);
        }
    }
    CHECK(random_ideal({8, 20, 1}) != random_ideal({8, 20, 2}));
}

TEST_CASE("standard power lists")
{
    const auto ns = standard_powers(25, 30, 15);
    CHECK(ns.size() == 40);
    CHECK(ns.front() == 1);
    CHECK(ns.back() == 40);
    const auto far = standard_powers(100, 5, 2);
    CHECK(far == std::vector<exponent>{1, 2, 3, 4, 5, 100, 101, 102});
}

TEST_CASE("differential check of the small example")
{
    const monomial_ideal small{{0, 2}, {2, 1}, {3, 0}};
    const auto report = differential_check(small, standard_powers(3, 10, 5));
    CHECK(report.ok());
    std::size_t all_three = 0;
    for (const auto &r : report.records) {
        all_three += r.naive && r.decomposed && r.assembled;
    }
    CHECK(all_three == 8);
    CHECK(report.records.back().mu == 7 + 2 * (10 - 3));

    std::ostringstream os;
    write_text(os, report);
    CHECK(os.str().find("10 checks, 0 mismatches") != std::string::npos);
    const auto j = to_json(report);
    CHECK(j["mismatches"] == 0);
    CHECK(j["records"].size() == 10);
}

TEST_CASE("a tampered component is detected")
{
    const monomial_ideal small{{0, 2}, {2, 1}, {3, 0}};
    auto dec = make_stable_decomposition(small);
    dec.comp.h[0] = monomial_ideal{{0, 1}, {1, 0}};
    const exponent ns[] = {3, 4, 5};
    const auto report = differential_check(dec, ns);
    CHECK_FALSE(report.ok());
    // H only enters for ell >= 1.
    CHECK(report.records[0].ok);
    CHECK(report.mismatches() == 2);
    CHECK(report.records[1].detail.find("assembled differs") != std::string::npos);
}

TEST_CASE("small random corpus")
{
    const auto report = run_corpus({25, 6, 12, 100}, {12});
    CHECK(report.ok());
    CHECK(report.records.size() >= 25 * 12);
}

TEST_CASE("antichain sweep over a random corpus")
{
    // Every assembled power at n >= s is a canonical antichain whose size
    // matches the mu polynomial.
    for (std::uint64_t seed = 500; seed < 540; ++seed) {
        const auto i = random_ideal({8, 20, seed});
        const auto dec = make_stable_decomposition(i);
        const auto mu = stable_mu(dec);
        for (exponent n = dec.s(); n <= dec.s() + 3; ++n) {
            const auto p = assemble_power(dec, n);
            CHECK(is_canonical(p.gens()));
            CHECK(p.size() == mu(n));
        }
    }
}
