#ifndef MONPOW_ORACLE_HPP
#define MONPOW_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

#include <json.hpp>

#include <monpow/engine.hpp>

namespace monpow
{

struct random_ideal_spec {
    std::size_t mu_max = 8;
    exponent exp_max = 20;
    std::uint64_t seed = 0;
};

// Deterministic in the seed. mu is uniform in [2, mu_max]; the x- and
// y-degrees are distinct samples from [0, exp_max]. The result need not be
// anchored.
monomial_ideal random_ideal(const random_ideal_spec &spec);

struct check_options {
    // Largest n handed to naive_power.
    exponent naive_limit = 30;
    std::uint64_t seed = 0; // label copied into records
    std::stop_token stop;
};

struct check_record {
    std::uint64_t seed = 0;
    exponent n = 0;
    std::size_t mu = 0;
    bool naive = false, decomposed = false, assembled = false;
    bool ok = true;
    double naive_ms = 0, decomposed_ms = 0, assembled_ms = 0;
    std::string detail;
};

struct check_report {
    std::vector<check_record> records;

    std::size_t mismatches() const noexcept;
    bool ok() const noexcept
    {
        return mismatches() == 0;
    }
    void append(const check_report &other);
};

// Compares naive_power, decomposed_power and assemble_power wherever each is
// defined. Failures are recorded, never thrown.
check_report differential_check(const monomial_ideal &i, std::span<const exponent> ns,
                                 const check_options &opts = {});
// Same, against a given (possibly tampered) decomposition.
check_report differential_check(const stable_decomposition &dec, std::span<const exponent> ns,
                                const check_options &opts = {});

// {1..naive_limit} together with {s..s+tail}.
std::vector<exponent> standard_powers(exponent s, exponent naive_limit = 30, exponent tail = 15);

struct corpus_spec {
    std::size_t count = 200;
    std::size_t mu_max = 8;
    exponent exp_max = 20;
    std::uint64_t base_seed = 1;
};

// Instance j uses seed base_seed + j.
check_report run_corpus(const corpus_spec &spec, const check_options &opts = {});

void write_text(std::ostream &os, const check_report &report);
nlohmann::json to_json(const check_report &report);

} // namespace monpow

#endif
