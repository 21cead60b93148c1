#include <monpow/oracle.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace monpow
{

namespace
{

using clock_type = std::chrono::steady_clock;

template <typename F>
auto timed(double &ms, F &&f)
{
    const auto t0 = clock_type::now();
    auto out = f();
    ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    return out;
}

std::vector<exponent> distinct_sample(std::mt19937_64 &rng, exponent exp_max, std::size_t count)
{
    std::vector<exponent> pool(static_cast<std::size_t>(exp_max) + 1);
    std::iota(pool.begin(), pool.end(), exponent(0));
    std::vector<exponent> out;
    std::sample(pool.begin(), pool.end(), std::back_inserter(out), count, rng);
    return out;
}

} // namespace

monomial_ideal random_ideal(const random_ideal_spec &spec)
{
    if (spec.mu_max < 2) {
        throw precondition_error("random_ideal requires mu_max >= 2");
    }
    if (spec.mu_max > spec.exp_max + 1) {
        throw precondition_error("random_ideal: mu_max exceeds exp_max + 1");
    }
    std::mt19937_64 rng(spec.seed);
    const auto mu = std::uniform_int_distribution<std::size_t>(2, spec.mu_max)(rng);
    auto xs = distinct_sample(rng, spec.exp_max, mu);
    auto ys = distinct_sample(rng, spec.exp_max, mu);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    std::vector<monomial> gens;
    for (std::size_t j = 0; j < mu; ++j) {
        gens.push_back({xs[j], ys[j]});
    }
    // Distinct sorted coordinates already form an antichain with mu >= 2.
    return monomial_ideal::from_canonical(std::move(gens));
}

std::size_t check_report::mismatches() const noexcept
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto &r) { return !r.ok; }));
}

void check_report::append(const check_report &other)
{
    records.insert(records.end(), other.records.begin(), other.records.end());
}

check_report differential_check(const monomial_ideal &i, std::span<const exponent> ns, const check_options &opts)
{
    if (i.is_principal()) {
        throw principal_ideal_error();
    }
    const auto anc = anchor(i);
    stable_decomposition dec;
    dec.base = i;
    dec.shift = anc.shift;
    dec.profile = compute_profile(anc.ideal);
    dec.bounds = compute_bounds(anc.ideal, dec.profile, dec.profile.big_d);
    // Components are only built when some n reaches s.
    if (std::any_of(ns.begin(), ns.end(), [&](exponent n) { return n >= dec.s(); })) {
        dec = make_stable_decomposition(i, {}, opts.stop);
    }
    return differential_check(dec, ns, opts);
}

check_report differential_check(const stable_decomposition &dec, std::span<const exponent> ns,
                                const check_options &opts)
{
    check_report report;
    const auto anc = anchor(dec.base);
    const exponent d = dec.bounds.d;
    std::optional<monomial_ideal> i_d;

    for (const exponent n : ns) {
        check_record rec;
        rec.seed = opts.seed;
        rec.n = n;
        std::vector<std::pair<const char *, monomial_ideal>> results;
        try {
            if (n >= 1 && n <= opts.naive_limit) {
                rec.naive = true;
                results.emplace_back("naive",
                                     timed(rec.naive_ms, [&] { return naive_power(dec.base, n, opts.stop); }));
            }
            if (n >= d && n >= 1) {
                rec.decomposed = true;
                results.emplace_back("decomposed", timed(rec.decomposed_ms, [&] {
                                         if (!i_d) {
                                             i_d = d == 0 ? monomial_ideal{} : naive_power(anc.ideal, d, opts.stop);
                                         }
                                         auto p = sum_of_staircases(*i_d, dec.profile.chosen, n - d, opts.stop);
                                         return shift(p, pow(anc.shift, n));
                                     }));
            }
            if (n >= dec.s() && !dec.comp.c.empty()) {
                rec.assembled = true;
                results.emplace_back("assembled",
                                     timed(rec.assembled_ms, [&] { return assemble_power(dec, n, nullptr, opts.stop); }));
            }
        } catch (const cancelled_error &) {
            throw;
        } catch (const std::exception &e) {
            rec.ok = false;
            rec.detail = e.what();
        }
        if (!results.empty()) {
            rec.mu = results.front().second.size();
        }
        for (std::size_t j = 1; j < results.size(); ++j) {
            if (results[j].second != results.front().second) {
                rec.ok = false;
                std::ostringstream os;
                os << results[j].first << " differs from " << results.front().first << " (" << results[j].second.size()
                   << " vs " << results.front().second.size() << " generators)";
                rec.detail = os.str();
                break;
            }
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

std::vector<exponent> standard_powers(exponent s, exponent naive_limit, exponent tail)
{
    std::vector<exponent> ns;
    for (exponent n = 1; n <= naive_limit; ++n) {
        ns.push_back(n);
    }
    for (exponent n = s; n <= s + tail; ++n) {
        if (n > naive_limit) {
            ns.push_back(n);
        }
    }
    return ns;
}

check_report run_corpus(const corpus_spec &spec, const check_options &opts)
{
    check_report report;
    for (std::size_t j = 0; j < spec.count; ++j) {
        const std::uint64_t seed = spec.base_seed + j;
        const auto i = random_ideal({spec.mu_max, spec.exp_max, seed});
        const auto dec = make_stable_decomposition(i, {}, opts.stop);
        auto o = opts;
        o.seed = seed;
        report.append(differential_check(dec, standard_powers(dec.s(), opts.naive_limit), o));
    }
    return report;
}

void write_text(std::ostream &os, const check_report &report)
{
    for (const auto &r : report.records) {
        os << (r.ok ? "ok  " : "FAIL") << " seed=" << r.seed << " n=" << r.n << " mu=" << r.mu << " methods="
           << (r.naive ? "n" : "-") << (r.decomposed ? "d" : "-") << (r.assembled ? "a" : "-");
        if (!r.detail.empty()) {
            os << " : " << r.detail;
        }
        os << '\n';
    }
    os << report.records.size() << " checks, " << report.mismatches() << " mismatches\n";
}

nlohmann::json to_json(const check_report &report)
{
    auto arr = nlohmann::json::array();
    for (const auto &r : report.records) {
        nlohmann::json methods = nlohmann::json::array();
        nlohmann::json timings = nlohmann::json::object();
        if (r.naive) {
            methods.push_back("naive");
            timings["naive"] = r.naive_ms;
        }
        if (r.decomposed) {
            methods.push_back("decomposed");
            timings["decomposed"] = r.decomposed_ms;
        }
        if (r.assembled) {
            methods.push_back("assembled");
            timings["assembled"] = r.assembled_ms;
        }
        arr.push_back({{"seed", r.seed},
                       {"n", r.n},
                       {"mu", r.mu},
                       {"methods", methods},
                       {"result", r.ok ? "ok" : "mismatch"},
                       {"detail", r.detail},
                       {"timings_ms", timings}});
    }
    return {{"records", arr}, {"checks", report.records.size()}, {"mismatches", report.mismatches()}};
}

} // namespace monpow
