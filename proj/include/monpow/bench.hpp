#ifndef MONPOW_BENCH_HPP
#define MONPOW_BENCH_HPP

#include <chrono>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <monpow/ideal.hpp>

namespace monpow
{

struct bench_ideal {
    std::string label;
    std::string note;
    monomial_ideal ideal;
};

// Lines "label | note | ideal", '#' starts a comment.
std::vector<bench_ideal> load_bench_ideals(std::istream &in);

// "s+1e3" (relative to s) or "500" (absolute).
struct power_spec {
    bool relative = true;
    exponent offset = 0;

    exponent resolve(exponent s) const
    {
        return relative ? checked_add(s, offset) : offset;
    }
};
power_spec parse_power_spec(std::string_view text);
std::vector<power_spec> parse_power_list(std::string_view text);

enum class bench_method { naive, decomposed, assembled };
const char *method_name(bench_method m) noexcept;
bench_method parse_method(std::string_view text);

struct bench_row {
    std::string label;
    bench_method method = bench_method::assembled;
    exponent n = 0;
    std::optional<double> preprocess_ms; // empty for methods without that step
    std::optional<double> compute_ms;    // empty on timeout
    std::optional<std::size_t> mu;
    bool timed_out = false;
};

struct bench_options {
    std::vector<power_spec> powers;
    std::vector<bench_method> methods{bench_method::naive, bench_method::decomposed, bench_method::assembled};
    std::chrono::duration<double> timeout{300.0};
    bool parallel = false;
};

std::vector<bench_row> run_bench(const std::vector<bench_ideal> &ideals, const bench_options &opts);

// Generator counts of completed cells agree per (ideal, n).
bool counts_agree(const std::vector<bench_row> &rows);

void write_csv(std::ostream &os, const std::vector<bench_row> &rows);
void write_table(std::ostream &os, const std::vector<bench_row> &rows);

} // namespace monpow

#endif
