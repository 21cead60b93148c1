#include <monpow/bench.hpp>

#include <algorithm>
#include <charconv>
#include <condition_variable>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stop_token>
#include <thread>

#include <monpow/engine.hpp>
#include <monpow/io.hpp>

namespace monpow
{

namespace
{

using clock_type = std::chrono::steady_clock;

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Runs f(token) with a watchdog that requests stop after the timeout.
// Returns elapsed milliseconds, or nothing when cancelled.
std::optional<double> run_with_timeout(const std::function<void(std::stop_token)> &f,
                                       std::chrono::duration<double> timeout)
{
    std::stop_source source;
    std::jthread watchdog([&source, timeout](std::stop_token done) {
        std::mutex m;
        std::condition_variable_any cv;
        std::unique_lock lock(m);
        cv.wait_for(lock, done, timeout, [] { return false; });
        if (!done.stop_requested()) {
            source.request_stop();
        }
    });
    const auto t0 = clock_type::now();
    try {
        f(source.get_token());
    } catch (const cancelled_error &) {
        return std::nullopt;
    }
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::string fmt_ms(const std::optional<double> &ms, const char *missing)
{
    if (!ms) {
        return missing;
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << *ms;
    return os.str();
}

const char *const dash = "—";

volatile std::uint64_t checksum_sink = 0;

std::vector<bench_row> bench_one(const bench_ideal &bi, const bench_options &opts)
{
    std::vector<bench_row> rows;
    power_engine engine(bi.ideal);
    const exponent s = engine.bounds().s;
    const exponent d = engine.bounds().d;
    const auto anc = anchor(bi.ideal);

    std::optional<monomial_ideal> i_d;
    std::optional<double> i_d_ms;
    bool i_d_failed = false;
    std::optional<double> dec_ms;
    bool dec_failed = false;

    for (const auto method : opts.methods) {
        for (const auto &ps : opts.powers) {
            bench_row row;
            row.label = bi.label;
            row.method = method;
            row.n = ps.resolve(s);
            std::size_t mu = 0;
            std::optional<double> ms;
            switch (method) {
                case bench_method::naive:
                    ms = run_with_timeout([&](std::stop_token st) { mu = naive_power(bi.ideal, row.n, st).size(); },
                                          opts.timeout);
                    break;
                case bench_method::decomposed:
                    if (!i_d && !i_d_failed) {
                        i_d_ms = run_with_timeout(
                            [&](std::stop_token st) {
                                i_d = d == 0 ? monomial_ideal{} : naive_power(anc.ideal, d, st);
                            },
                            opts.timeout);
                        i_d_failed = !i_d_ms;
                    }
                    row.preprocess_ms = i_d_ms;
                    if (i_d && row.n >= d) {
                        ms = run_with_timeout(
                            [&](std::stop_token st) {
                                mu = sum_of_staircases(*i_d, engine.profile().chosen, row.n - d, st).size();
                            },
                            opts.timeout);
                    }
                    break;
                case bench_method::assembled:
                    if (!dec_ms && !dec_failed) {
                        dec_ms = run_with_timeout([&](std::stop_token st) { engine.decomposition(st); }, opts.timeout);
                        dec_failed = !dec_ms;
                    }
                    row.preprocess_ms = dec_ms;
                    if (dec_ms && row.n >= s) {
                        ms = run_with_timeout(
                            [&](std::stop_token st) {
                                // The checksum keeps the emitted generators observable.
                                std::uint64_t count = 0, sum = 0;
                                visit_power(
                                    engine.decomposition(), row.n, [&sum](const monomial &g) { sum += g.a ^ g.b; },
                                    &count, st);
                                checksum_sink = sum;
                                mu = static_cast<std::size_t>(count);
                            },
                            opts.timeout);
                    }
                    break;
            }
            row.compute_ms = ms;
            // Cells below the method's range (n < D or n < s) are skipped, not timed out.
            const bool in_range = method == bench_method::naive ||
                                  (method == bench_method::decomposed ? row.n >= d : row.n >= s);
            row.timed_out = !ms && (in_range || !row.preprocess_ms);
            if (ms) {
                row.mu = mu;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace

std::vector<bench_ideal> load_bench_ideals(std::istream &in)
{
    std::vector<bench_ideal> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto body = trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty()) {
            continue;
        }
        const auto p1 = body.find('|');
        const auto p2 = p1 == std::string_view::npos ? p1 : body.find('|', p1 + 1);
        if (p2 == std::string_view::npos) {
            throw parse_error("bench file line " + std::to_string(lineno) + ": expected 'label | note | ideal'", 0);
        }
        out.push_back({std::string(trim(body.substr(0, p1))), std::string(trim(body.substr(p1 + 1, p2 - p1 - 1))),
                       parse_ideal(body.substr(p2 + 1))});
    }
    return out;
}

power_spec parse_power_spec(std::string_view text)
{
    auto t = trim(text);
    power_spec ps;
    if (!t.empty() && t[0] == 's') {
        t = trim(t.substr(1));
        if (t.empty()) {
            return ps;
        }
        if (t[0] != '+') {
            throw parse_error("expected '+' after 's'", 1);
        }
        t = trim(t.substr(1));
    } else {
        ps.relative = false;
    }
    // Integer, optionally with a decimal exponent: 1e3 = 1000.
    exponent mant = 0, e10 = 0;
    const char *first = t.data(), *last = t.data() + t.size();
    auto r = std::from_chars(first, last, mant);
    if (r.ec != std::errc() || r.ptr == first) {
        throw parse_error("expected a power such as 's+1e3' or '500'", 0);
    }
    if (r.ptr != last) {
        if (*r.ptr != 'e' && *r.ptr != 'E') {
            throw parse_error("unexpected character in power", static_cast<std::size_t>(r.ptr - first));
        }
        const char *ep = r.ptr + 1;
        auto r2 = std::from_chars(ep, last, e10);
        if (r2.ec != std::errc() || r2.ptr != last) {
            throw parse_error("bad decimal exponent in power", static_cast<std::size_t>(ep - first));
        }
    }
    for (exponent j = 0; j < e10; ++j) {
        mant = checked_mul(mant, 10);
    }
    ps.offset = mant;
    return ps;
}

std::vector<power_spec> parse_power_list(std::string_view text)
{
    std::vector<power_spec> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!trim(item).empty()) {
            out.push_back(parse_power_spec(item));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

const char *method_name(bench_method m) noexcept
{
    switch (m) {
        case bench_method::naive:
            return "naive";
        case bench_method::decomposed:
            return "decomposed";
        case bench_method::assembled:
            return "assembled";
    }
    return "?";
}

bench_method parse_method(std::string_view text)
{
    const auto t = trim(text);
    if (t == "naive") {
        return bench_method::naive;
    }
    if (t == "decomposed") {
        return bench_method::decomposed;
    }
    if (t == "assembled" || t == "fast") {
        return bench_method::assembled;
    }
    throw parse_error("unknown method '" + std::string(t) + "'", 0);
}

std::vector<bench_row> run_bench(const std::vector<bench_ideal> &ideals, const bench_options &opts)
{
    std::vector<std::vector<bench_row>> per(ideals.size());
    if (opts.parallel) {
        std::vector<std::jthread> workers;
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            workers.emplace_back([&, j] { per[j] = bench_one(ideals[j], opts); });
        }
    } else {
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            per[j] = bench_one(ideals[j], opts);
        }
    }
    std::vector<bench_row> rows;
    for (auto &p : per) {
        rows.insert(rows.end(), p.begin(), p.end());
    }
    return rows;
}

bool counts_agree(const std::vector<bench_row> &rows)
{
    std::map<std::pair<std::string, exponent>, std::size_t> seen;
    for (const auto &r : rows) {
        if (!r.mu) {
            continue;
        }
        auto [it, fresh] = seen.emplace(std::make_pair(r.label, r.n), *r.mu);
        if (!fresh && it->second != *r.mu) {
            return false;
        }
    }
    return true;
}

void write_csv(std::ostream &os, const std::vector<bench_row> &rows)
{
    os << "ideal,method,n,preprocess_ms,compute_ms,mu\n";
    for (const auto &r : rows) {
        os << r.label << ',' << method_name(r.method) << ',' << r.n << ',' << fmt_ms(r.preprocess_ms, "*") << ','
           << fmt_ms(r.compute_ms, dash) << ',' << (r.mu ? std::to_string(*r.mu) : dash) << '\n';
    }
}

void write_table(std::ostream &os, const std::vector<bench_row> &rows)
{
    const char *head[] = {"ideal", "method", "n", "preprocess ms", "compute ms", "mu"};
    std::vector<std::vector<std::string>> cells;
    for (const auto &r : rows) {
        cells.push_back({r.label, method_name(r.method), std::to_string(r.n), fmt_ms(r.preprocess_ms, "*"),
                         fmt_ms(r.compute_ms, dash), r.mu ? std::to_string(*r.mu) : dash});
    }
    // Display width: the dash is one column but three bytes.
    auto width = [](const std::string &s) { return s == dash ? std::size_t(1) : s.size(); };
    std::size_t w[6];
    for (int c = 0; c < 6; ++c) {
        w[c] = std::char_traits<char>::length(head[c]);
        for (const auto &row : cells) {
            w[c] = std::max(w[c], width(row[c]));
        }
    }
    auto line = [&](auto get) {
        for (int c = 0; c < 6; ++c) {
            const std::string s = get(c);
            const bool left = c < 2;
            const std::string pad(w[c] - width(s), ' ');
            os << (c ? "  " : "") << (left ? s + pad : pad + s);
        }
        os << '\n';
    };
    line([&](int c) { return std::string(head[c]); });
    line([&](int c) { return std::string(w[c], '-'); });
    for (const auto &row : cells) {
        line([&](int c) { return row[c]; });
    }
}

} // namespace monpow
