#ifndef MONPOW_ENGINE_HPP
#define MONPOW_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stop_token>
#include <vector>

#include <monpow/ideal.hpp>
#include <monpow/newton.hpp>
#include <monpow/segments.hpp>

namespace monpow
{

// Σ_i (g_i, g_{i+1})^ell · I^D, given I^D and the chain g_1..g_{k+1} of I.
monomial_ideal sum_of_staircases(const monomial_ideal &i_d, std::span<const monomial> gs, exponent ell,
                                 std::stop_token stop = {});

// I^n through I^D with D = profile.big_d (or the override). Requires n >= D.
monomial_ideal decomposed_power(const monomial_ideal &i, const persistence_profile &profile, exponent n,
                                std::stop_token stop = {}, std::optional<exponent> d_override = {});

struct stability_bounds {
    exponent d = 0;
    exponent r_x = 0, r_y = 0;
    exponent r = 0;
    exponent s = 0;
    axis ax = axis::y;
};

// Bounds for an anchored ideal, its profile, and D >= D_P.
stability_bounds compute_bounds(const monomial_ideal &anchored, const persistence_profile &profile, exponent d);

struct decomposition_options {
    // Chosen P, as generators of the input ideal.
    std::optional<std::vector<monomial>> chosen;
    std::optional<exponent> d;
    // Orientation override; the default picks the smaller r, preferring y.
    std::optional<axis> ax;
};

// Everything needed to emit G(I^n) for n >= s. Components live in the
// working frame: the anchored ideal, transposed when the axis is x.
struct stable_decomposition {
    monomial_ideal base;
    monomial shift;
    persistence_profile profile; // of the anchored ideal
    stability_bounds bounds;
    glued_components comp;       // comp.base = G(working^s)

    axis ax() const noexcept
    {
        return bounds.ax;
    }
    exponent s() const noexcept
    {
        return bounds.s;
    }
    std::size_t k() const noexcept
    {
        return comp.k();
    }

    // Working-frame point to a generator of I^n.
    monomial to_original(const monomial &w, exponent n) const
    {
        const monomial p = bounds.ax == axis::y ? w : transpose(w);
        return p * pow(shift, n);
    }
    monomial to_working(const monomial &f, exponent n) const
    {
        const monomial p = f / pow(shift, n);
        return bounds.ax == axis::y ? p : transpose(p);
    }
};

stable_decomposition make_stable_decomposition(const monomial_ideal &i, const decomposition_options &opts = {},
                                               std::stop_token stop = {});

// Emits G(I^n), n >= s, in canonical order. Each emitted generator costs one
// exponent addition; additions, when given, accumulates that count.
template <typename Visitor>
void visit_power(const stable_decomposition &dec, exponent n, Visitor &&visit, std::uint64_t *additions = nullptr,
                 std::stop_token stop = {});

monomial_ideal assemble_power(const stable_decomposition &dec, exponent n, std::uint64_t *additions = nullptr,
                              std::stop_token stop = {});

struct mu_polynomial {
    exponent s = 0;
    exponent intercept = 0;
    exponent slope = 0;

    // Valid for n >= s.
    exponent operator()(exponent n) const
    {
        return checked_add(intercept, checked_mul(n - s, slope));
    }
};

mu_polynomial stable_mu(const stable_decomposition &dec);
mu_polynomial stable_mu(const monomial_ideal &i);

// G(I^{n+1}) from G(I^n), n >= s, one band lookup per generator.
monomial_ideal shift_generators(const stable_decomposition &dec, std::span<const monomial> gens_n, exponent n);

struct back_shift {
    std::size_t index;  // the factor is the chosen generator g_{index+1}
    monomial factor;    // in the frame of the input ideal
};

// For g in G(I^n) with n in {s+1, s+2}: a chosen generator with
// g / factor in G(I^{n-1}).
back_shift back_shift_factor(const stable_decomposition &dec, const monomial &g, exponent n);

// Routes n < D to naive_power, D <= n < s to decomposed_power and n >= s to
// assemble_power. The decomposition is built on first use.
class power_engine
{
public:
    explicit power_engine(monomial_ideal i, decomposition_options opts = {});

    const monomial_ideal &ideal() const noexcept
    {
        return m_ideal;
    }
    const persistence_profile &profile() const noexcept
    {
        return m_profile;
    }
    const stability_bounds &bounds() const noexcept
    {
        return m_bounds;
    }
    const stable_decomposition &decomposition(std::stop_token stop = {});

    enum class route { naive, decomposed, assembled };
    route route_for(exponent n) const;

    monomial_ideal operator()(exponent n, std::stop_token stop = {});

private:
    monomial_ideal m_ideal;
    decomposition_options m_opts;
    anchored_ideal m_anchored;
    persistence_profile m_profile;
    stability_bounds m_bounds;
    std::optional<stable_decomposition> m_dec;
};

monomial_ideal power(const monomial_ideal &i, exponent n);

// ---------------------------------------------------------------------------

template <typename Visitor>
void visit_power(const stable_decomposition &dec, exponent n, Visitor &&visit, std::uint64_t *additions,
                 std::stop_token stop)
{
    if (n < dec.s()) {
        throw precondition_error("assemble_power requires n >= s");
    }
    const exponent ell = n - dec.s();
    const auto &comp = dec.comp;
    const std::size_t k = comp.k();

    // Part sequence C_0, H_1 x ell, C_1, ..., H_k x ell, C_k as runs.
    struct run {
        const monomial_ideal *part;
        exponent count;
        exponent dx, dy;
    };
    std::vector<run> runs;
    exponent x_total = 0, y_total = 0;
    auto push = [&](const monomial_ideal &p, exponent count) {
        run rr{&p, count, dist(p, axis::x), dist(p, axis::y)};
        x_total = checked_add(x_total, checked_mul(rr.dx, count));
        y_total = checked_add(y_total, checked_mul(rr.dy, count));
        runs.push_back(rr);
    };
    push(comp.c[0], 1);
    for (std::size_t i = 0; i < k; ++i) {
        if (ell > 0) {
            push(comp.h[i], ell);
        }
        push(comp.c[i + 1], 1);
    }

    // The gcd shift is folded into the running offset, so each generator costs
    // exactly one monomial addition.
    const monomial gn = pow(dec.shift, n);
    const bool flip = dec.ax() == axis::x;
    std::uint64_t adds = 0;
    auto emit = [&](exponent xo, exponent yo, const monomial &w) {
        const monomial out = flip ? monomial{yo + w.b, xo + w.a} : monomial{xo + w.a, yo + w.b};
        ++adds;
        visit(out);
    };
    const monomial base_off = flip ? transpose(gn) : gn;
    // Every emitted coordinate is bounded by these two sums.
    (void)checked_add(x_total, base_off.a);
    (void)checked_add(y_total, base_off.b);

    if (!flip) {
        exponent xo = base_off.a, yo = base_off.b + y_total;
        bool first = true;
        for (const auto &rr : runs) {
            for (exponent c = 0; c < rr.count; ++c) {
                throw_if_stopped(stop);
                yo -= rr.dy;
                const auto &p = *rr.part;
                for (std::size_t g = first ? 0 : 1; g < p.size(); ++g) {
                    emit(xo, yo, p[g]);
                }
                first = false;
                xo += rr.dx;
            }
        }
    } else {
        // Reverse traversal so the transposed output comes out in canonical order.
        exponent xo = base_off.a + x_total, yo = base_off.b;
        for (std::size_t ri = runs.size(); ri-- > 0;) {
            const auto &rr = runs[ri];
            for (exponent c = 0; c < rr.count; ++c) {
                throw_if_stopped(stop);
                xo -= rr.dx;
                const auto &p = *rr.part;
                const bool first = ri == 0 && c + 1 == rr.count;
                for (std::size_t g = p.size(); g-- > (first ? 0 : 1);) {
                    emit(xo, yo, p[g]);
                }
                yo += rr.dy;
            }
        }
    }
    if (additions) {
        *additions += adds;
    }
}

} // namespace monpow

#endif
