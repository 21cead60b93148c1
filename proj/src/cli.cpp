#include <monpow/cli.hpp>

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <monpow/bench.hpp>
#include <monpow/engine.hpp>
#include <monpow/io.hpp>
#include <monpow/oracle.hpp>
#include <monpow/plot.hpp>

namespace monpow
{

namespace
{

// Usage problems discovered after argument parsing.
class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw usage_error("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// "@file" reads the ideal from a file.
monomial_ideal ideal_arg(const std::string &arg)
{
    return parse_ideal(!arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg);
}

struct pipeline_flags {
    std::string chosen;
    bool weakly = false;
    std::optional<exponent> d;
    std::string axis_name;

    void attach(CLI::App *app)
    {
        app->add_option("--chosen", chosen, "chosen P, between P(I) and P*(I), as ideal text");
        app->add_flag("--weakly", weakly, "use P*(I) as the chosen P");
        app->add_option("--D", d, "D override (at least D_P)");
        app->add_option("--axis", axis_name, "orientation override")->check(CLI::IsMember({"x", "y"}));
    }

    decomposition_options options(const monomial_ideal &i) const
    {
        decomposition_options o;
        if (!chosen.empty() && weakly) {
            throw usage_error("--chosen and --weakly are exclusive");
        }
        if (!chosen.empty()) {
            const auto p = parse_ideal(chosen);
            o.chosen = std::vector<monomial>(p.begin(), p.end());
        } else if (weakly) {
            if (i.is_principal()) {
                throw principal_ideal_error();
            }
            o.chosen = weakly_persistent_generators(i);
        }
        o.d = d;
        if (!axis_name.empty()) {
            o.ax = axis_name == "x" ? axis::x : axis::y;
        }
        return o;
    }
};

int cmd_analyze(std::ostream &out, const std::string &text, const pipeline_flags &flags)
{
    const auto i = ideal_arg(text);
    power_engine engine(i, flags.options(i));
    const auto &p = engine.profile();
    const auto &b = engine.bounds();
    auto list = [](const std::vector<monomial> &v) {
        return to_pairs(monomial_ideal::from_canonical(v));
    };
    out << "ideal: " << to_pairs(i) << '\n'
        << "mu: " << i.size() << '\n'
        << "gcd: " << gcd_of(i) << '\n'
        << "P(I): " << list(p.persistent) << '\n'
        << "P*(I): " << list(p.weakly_persistent) << '\n'
        << "P: " << list(p.chosen) << '\n'
        << "delta_P: " << p.delta << '\n'
        << "d_P: " << p.d << '\n'
        << "D_P: " << p.big_d << '\n'
        << "D: " << b.d << '\n'
        << "r_x: " << b.r_x << '\n'
        << "r_y: " << b.r_y << '\n'
        << "r: " << b.r << '\n'
        << "axis: " << axis_name(b.ax) << '\n'
        << "s: " << b.s << '\n';
    return exit_ok;
}

int cmd_power(std::ostream &out, const std::string &text, exponent n, const std::string &method,
              const std::string &format, const pipeline_flags &flags)
{
    const auto i = ideal_arg(text);
    if (n == 0) {
        throw precondition_error("n must be at least 1");
    }
    const bool terms = format == "terms";
    bool first = true;
    auto put = [&](const monomial &f) {
        if (terms) {
            out << (first ? "" : ", ") << to_term(f);
        } else {
            out << (first ? "[" : ",") << '(' << f.a << ',' << f.b << ')';
        }
        first = false;
    };
    auto finish = [&] { out << (terms ? "" : "]") << '\n'; };

    if (method == "naive") {
        for (const auto &f : naive_power(i, n)) {
            put(f);
        }
        finish();
        return exit_ok;
    }
    power_engine engine(i, flags.options(i));
    const auto route = engine.route_for(n);
    if (method == "decomposed" && n < engine.bounds().d) {
        throw precondition_error("decomposed method requires n >= D = " + std::to_string(engine.bounds().d));
    }
    if (method == "fast" && route != power_engine::route::assembled) {
        throw precondition_error("fast method requires n >= s = " + std::to_string(engine.bounds().s));
    }
    if (method == "decomposed") {
        const auto anc = anchor(i);
        const auto p = decomposed_power(anc.ideal, engine.profile(), n, {}, engine.bounds().d);
        for (const auto &f : shift(p, pow(anc.shift, n))) {
            put(f);
        }
    } else if (route == power_engine::route::assembled) {
        // Streamed: the full generator list is never materialized.
        visit_power(engine.decomposition(), n, put);
    } else {
        for (const auto &f : engine(n)) {
            put(f);
        }
    }
    finish();
    return exit_ok;
}

int cmd_mu(std::ostream &out, const std::string &text, std::optional<exponent> n, const pipeline_flags &flags)
{
    const auto i = ideal_arg(text);
    power_engine engine(i, flags.options(i));
    const auto mu = stable_mu(engine.decomposition());
    if (!n) {
        out << "μ(I^n) = " << mu.intercept << " + " << mu.slope << "(n-" << mu.s << ") for n ≥ " << mu.s << '\n';
        return exit_ok;
    }
    if (*n == 0) {
        throw precondition_error("n must be at least 1");
    }
    if (*n >= mu.s) {
        out << "μ(I^" << *n << ") = " << mu(*n) << '\n';
    } else {
        out << "μ(I^" << *n << ") = " << engine(*n).size() << " (pre-stable, n < s = " << mu.s << ")\n";
    }
    return exit_ok;
}

int cmd_plot(const std::string &text, const std::string &path, std::optional<exponent> n, bool no_newton)
{
    auto i = ideal_arg(text);
    if (n) {
        if (*n == 0) {
            throw precondition_error("n must be at least 1");
        }
        i = i.is_principal() ? naive_power(i, *n) : power(i, *n);
    }
    plot_options opts;
    opts.newton_boundary = !no_newton;
    const auto svg = render_svg(i, opts);
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << svg) || !f.flush()) {
        throw usage_error("cannot write " + path);
    }
    return exit_ok;
}

int cmd_bench(std::ostream &out, const std::string &file, const std::string &powers, const std::string &methods,
              double timeout, const std::string &csv, bool parallel)
{
    std::ifstream in(file);
    if (!in) {
        throw usage_error("cannot read " + file);
    }
    const auto ideals = load_bench_ideals(in);
    bench_options opts;
    opts.powers = parse_power_list(powers);
    opts.methods.clear();
    std::stringstream ms(methods);
    for (std::string m; std::getline(ms, m, ',');) {
        opts.methods.push_back(parse_method(m));
    }
    opts.timeout = std::chrono::duration<double>(timeout);
    opts.parallel = parallel;
    for (const auto &bi : ideals) {
        out << bi.label << ": " << bi.note << '\n';
    }
    if (parallel) {
        out << "note: cells ran concurrently; timings include contention\n";
    }
    const auto rows = run_bench(ideals, opts);
    write_table(out, rows);
    if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) {
            throw usage_error("cannot write " + csv);
        }
        write_csv(f, rows);
    } else {
        out << '\n';
        write_csv(out, rows);
    }
    if (!counts_agree(rows)) {
        out << "generator counts disagree across methods\n";
        return exit_check_failed;
    }
    return exit_ok;
}

int cmd_check(std::ostream &out, corpus_spec spec, bool seed_given, exponent naive_limit, const std::string &json,
              bool verbose)
{
    if (!seed_given) {
        if (const char *env = std::getenv("MONPOW_CHECK_SEED")) {
            try {
                spec.base_seed = std::stoull(env);
            } catch (const std::exception &) {
                throw usage_error("MONPOW_CHECK_SEED is not an integer");
            }
        }
    }
    check_options opts;
    opts.naive_limit = naive_limit;
    const auto report = run_corpus(spec, opts);
    if (verbose) {
        write_text(out, report);
    } else {
        out << spec.count << " ideals (seeds " << spec.base_seed << ".." << spec.base_seed + spec.count - 1 << "), "
            << report.records.size() << " checks, " << report.mismatches() << " mismatches\n";
    }
    if (!json.empty()) {
        std::ofstream f(json);
        if (!f || !(f << to_json(report).dump(2) << '\n')) {
            throw usage_error("cannot write " + json);
        }
    }
    return report.ok() ? exit_ok : exit_check_failed;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Powers of bivariate monomial ideals via stable components", "monpow"};
    app.require_subcommand(1);

    std::string ideal_text, method = "auto", format = "pairs", out_path, file, powers = "s+1e2,s+1e3,s+1e4",
                                methods = "naive,decomposed,assembled", csv, json;
    exponent n = 0;
    std::optional<exponent> opt_n;
    double timeout = 300.0;
    bool parallel = false, no_newton = false, verbose = false;
    corpus_spec spec;
    exponent naive_limit = 30;
    pipeline_flags flags;

    auto *analyze = app.add_subcommand("analyze", "persistence profile and stability bounds");
    analyze->add_option("ideal", ideal_text, "ideal text or @file")->required();
    flags.attach(analyze);

    auto *pw = app.add_subcommand("power", "minimal generators of I^n");
    pw->add_option("ideal", ideal_text, "ideal text or @file")->required();
    pw->add_option("n", n, "exponent")->required();
    pw->add_option("--method", method, "auto|naive|decomposed|fast")
        ->check(CLI::IsMember({"auto", "naive", "decomposed", "fast"}));
    pw->add_option("--format", format, "pairs|terms")->check(CLI::IsMember({"pairs", "terms"}));
    flags.attach(pw);

    auto *mu = app.add_subcommand("mu", "the mu polynomial, or mu(I^n)");
    mu->add_option("ideal", ideal_text, "ideal text or @file")->required();
    mu->add_option("n", opt_n, "exponent");
    flags.attach(mu);

    auto *bench = app.add_subcommand("bench", "timing table over an ideal file");
    bench->add_option("file", file, "bench ideal file")->required();
    bench->add_option("--powers", powers, "comma list such as s+1e2,s+1e3 or absolute n");
    bench->add_option("--methods", methods, "comma list of naive,decomposed,assembled");
    bench->add_option("--timeout", timeout, "seconds per cell");
    bench->add_option("--csv", csv, "write CSV to this path");
    bench->add_flag("--parallel", parallel, "run ideals concurrently");

    auto *plot = app.add_subcommand("plot", "SVG staircase diagram");
    plot->add_option("ideal", ideal_text, "ideal text or @file")->required();
    plot->add_option("--out", out_path, "output SVG path")->required();
    plot->add_option("--power", opt_n, "plot I^n instead of I");
    plot->add_flag("--no-newton", no_newton, "omit the Newton polyhedron boundary");

    auto *check = app.add_subcommand("check", "differential check over a seeded random corpus");
    check->add_option("--count", spec.count, "number of ideals");
    check->add_option("--mu-max", spec.mu_max, "maximal number of generators");
    check->add_option("--exp-max", spec.exp_max, "maximal exponent");
    auto *seed_opt = check->add_option("--seed", spec.base_seed, "first seed (default from MONPOW_CHECK_SEED or 1)");
    check->add_option("--naive-limit", naive_limit, "largest n for the naive oracle");
    check->add_option("--json", json, "write structured records to this path");
    check->add_flag("--verbose", verbose, "one line per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*analyze) {
            return cmd_analyze(out, ideal_text, flags);
        }
        if (*pw) {
            return cmd_power(out, ideal_text, n, method, format, flags);
        }
        if (*mu) {
            return cmd_mu(out, ideal_text, opt_n, flags);
        }
        if (*bench) {
            return cmd_bench(out, file, powers, methods, timeout, csv, parallel);
        }
        if (*plot) {
            return cmd_plot(ideal_text, out_path, opt_n, no_newton);
        }
        if (*check) {
            return cmd_check(out, spec, seed_opt->count() > 0, naive_limit, json, verbose);
        }
    } catch (const parse_error &e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const usage_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const principal_ideal_error &) {
        err << "error: principal ideal\n";
        return exit_precondition;
    } catch (const precondition_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const overflow_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_overflow;
    }
    return exit_usage;
}

} // namespace monpow
