#include <monpow/engine.hpp>

#include <algorithm>

namespace monpow
{

namespace
{

std::vector<monomial> working_chain(const std::vector<monomial> &chosen, axis ax)
{
    if (ax == axis::y) {
        return chosen;
    }
    std::vector<monomial> out;
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
        out.push_back(transpose(*it));
    }
    return out;
}

monomial_ideal power_or_unit(const monomial_ideal &i, exponent d, std::stop_token stop)
{
    return d == 0 ? monomial_ideal{} : naive_power(i, d, stop);
}

// max_i ceil(d * total / step_i), the r_• bound of one orientation.
exponent r_bound(std::span<const monomial> gs, exponent d, exponent total, axis ax)
{
    exponent r = 0;
    for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
        r = std::max(r, ceil_div(checked_mul(d, total), pair_dist(gs[i], gs[i + 1], ax)));
    }
    return r;
}

std::vector<monomial> anchored_choice(const std::vector<monomial> &chosen, const monomial &shift)
{
    std::vector<monomial> out;
    out.reserve(chosen.size());
    for (const auto &g : chosen) {
        if (!divides(shift, g)) {
            throw precondition_error("chosen generator is not a generator of the ideal");
        }
        out.push_back(g / shift);
    }
    return out;
}

persistence_profile profile_for(const anchored_ideal &anc, const decomposition_options &opts)
{
    std::optional<std::vector<monomial>> chosen;
    if (opts.chosen) {
        chosen = anchored_choice(*opts.chosen, anc.shift);
    }
    return compute_profile(anc.ideal, std::move(chosen));
}

exponent effective_d(const persistence_profile &prof, const decomposition_options &opts)
{
    const exponent d = opts.d.value_or(prof.big_d);
    if (d < prof.big_d) {
        throw precondition_error("D must be at least D_P");
    }
    return d;
}

stability_bounds bounds_for(const monomial_ideal &anchored, const persistence_profile &prof,
                            const decomposition_options &opts)
{
    auto b = compute_bounds(anchored, prof, effective_d(prof, opts));
    if (opts.ax && *opts.ax != b.ax) {
        b.ax = *opts.ax;
        b.r = b.ax == axis::y ? b.r_y : b.r_x;
        b.s = checked_add(checked_add(b.d, b.r), 1);
    }
    return b;
}

// Least y-degree among generators at or above bound.
exponent threshold_degree(std::span<const monomial> gens, exponent bound)
{
    auto it = std::partition_point(gens.begin(), gens.end(), [bound](const monomial &f) { return f.b >= bound; });
    if (it == gens.begin()) {
        throw invariant_error("no generator above the link threshold");
    }
    return std::prev(it)->b;
}

} // namespace

monomial_ideal sum_of_staircases(const monomial_ideal &i_d, std::span<const monomial> gs, exponent ell,
                                 std::stop_token stop)
{
    if (ell == 0) {
        return i_d;
    }
    std::vector<monomial> all;
    for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
        const auto part = staircase_product(gs[i], gs[i + 1], ell, i_d, stop);
        all.insert(all.end(), part.begin(), part.end());
    }
    return minimalize(std::move(all));
}

monomial_ideal decomposed_power(const monomial_ideal &i, const persistence_profile &profile, exponent n,
                                std::stop_token stop, std::optional<exponent> d_override)
{
    const exponent d = d_override.value_or(profile.big_d);
    if (d < profile.big_d) {
        throw precondition_error("D must be at least D_P");
    }
    if (n < d) {
        throw precondition_error("decomposed_power requires n >= D");
    }
    if (n == 0) {
        throw precondition_error("power requires n >= 1");
    }
    return sum_of_staircases(power_or_unit(i, d, stop), profile.chosen, n - d, stop);
}

stability_bounds compute_bounds(const monomial_ideal &anchored, const persistence_profile &profile, exponent d)
{
    stability_bounds b;
    b.d = d;
    b.r_y = r_bound(profile.chosen, d, dist(anchored, axis::y), axis::y);
    b.r_x = r_bound(profile.chosen, d, dist(anchored, axis::x), axis::x);
    b.ax = b.r_y <= b.r_x ? axis::y : axis::x;
    b.r = std::min(b.r_x, b.r_y);
    b.s = checked_add(checked_add(d, b.r), 1);
    return b;
}

stable_decomposition make_stable_decomposition(const monomial_ideal &i, const decomposition_options &opts,
                                               std::stop_token stop)
{
    if (i.is_principal()) {
        throw principal_ideal_error();
    }
    auto anc = anchor(i);
    stable_decomposition dec{i, anc.shift, profile_for(anc, opts), {}, {}};
    dec.bounds = bounds_for(anc.ideal, dec.profile, opts);
    const auto working = dec.bounds.ax == axis::y ? anc.ideal : transpose(anc.ideal);
    const auto gs = working_chain(dec.profile.chosen, dec.bounds.ax);
    dec.comp = glue_components(gs, power_or_unit(working, dec.bounds.d, stop), dec.bounds.r, stop);
    return dec;
}

monomial_ideal assemble_power(const stable_decomposition &dec, exponent n, std::uint64_t *additions,
                              std::stop_token stop)
{
    std::vector<monomial> gens;
    gens.reserve(static_cast<std::size_t>(stable_mu(dec)(std::max(n, dec.s()))));
    visit_power(dec, n, [&gens](const monomial &f) { gens.push_back(f); }, additions, stop);
    return monomial_ideal::from_canonical(std::move(gens));
}

mu_polynomial stable_mu(const stable_decomposition &dec)
{
    mu_polynomial mu{dec.s(), dec.comp.base.size(), 0};
    for (const auto &h : dec.comp.h) {
        mu.slope += h.size() - 1;
    }
    return mu;
}

mu_polynomial stable_mu(const monomial_ideal &i)
{
    return stable_mu(make_stable_decomposition(i));
}

monomial_ideal shift_generators(const stable_decomposition &dec, std::span<const monomial> gens_n, exponent n)
{
    if (!is_canonical(gens_n)) {
        throw precondition_error("shift_generators input is not an antichain in canonical order");
    }
    if (n < dec.s()) {
        throw precondition_error("shift_generators requires n >= s");
    }
    const auto &gs = dec.comp.gs;
    const std::size_t k = gs.size() - 1;

    std::vector<monomial> w;
    w.reserve(gens_n.size());
    for (const auto &f : gens_n) {
        w.push_back(dec.to_working(f, n));
    }
    std::sort(w.begin(), w.end());

    // Link points of the level-n chain, as y-degrees; hy[0] is the top.
    const exponent r_n = n - dec.bounds.d - 1;
    std::vector<exponent> hy{w.front().b};
    std::vector<exponent> v(k);
    for (std::size_t i = 0; i < k; ++i) {
        v[i] = pair_dist(gs[i], gs[i + 1], axis::y);
        hy.push_back(
            threshold_degree(w, checked_add(checked_mul(r_n, v[i]), checked_mul(r_n + 1, gs[i + 1].b))));
    }

    std::vector<monomial> out;
    out.reserve(w.size() + k * 8);
    for (const auto &f : w) {
        const exponent y = f.b;
        bool placed = false;
        for (std::size_t i = 1; i <= k && !placed; ++i) {
            if (hy[i] <= y && y <= hy[i] + v[i - 1]) {
                out.push_back(f * gs[i - 1]);
                out.push_back(f * gs[i]);
                placed = true;
            } else if (hy[i] + v[i - 1] < y && y <= hy[i - 1]) {
                out.push_back(f * gs[i - 1]);
                placed = true;
            }
        }
        if (!placed) {
            // Below the last link point.
            out.push_back(f * gs[k]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!is_canonical(out)) {
        throw invariant_error("shifted generators are not an antichain");
    }
    for (auto &f : out) {
        f = dec.to_original(f, n + 1);
    }
    std::sort(out.begin(), out.end());
    return monomial_ideal::from_canonical(std::move(out));
}

back_shift back_shift_factor(const stable_decomposition &dec, const monomial &g, exponent n)
{
    if (n != dec.s() + 1 && n != dec.s() + 2) {
        throw precondition_error("back_shift_factor requires n in {s+1, s+2}");
    }
    const auto &gs = dec.comp.gs;
    const auto &h = dec.comp.points;
    const monomial w = dec.to_working(g, n);
    for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
        const exponent lower = checked_mul(gs[i + 1].b, n);
        if (w.b < lower) {
            continue;
        }
        if (w.b > checked_mul(gs[i].b, n)) {
            break;
        }
        // h[i + 1] is the link point between C_i and C_{i+1}.
        monomial pivot = h[i + 1] * gs[i];
        if (n == dec.s() + 2) {
            pivot = pivot * gs[i + 1];
        }
        const std::size_t idx = w.b >= pivot.b ? i : i + 1;
        const monomial f = dec.ax() == axis::y ? gs[idx] : transpose(gs[idx]);
        return {dec.ax() == axis::y ? idx : gs.size() - 1 - idx, f * dec.shift};
    }
    throw precondition_error("generator outside the y-range of I^n");
}

power_engine::power_engine(monomial_ideal i, decomposition_options opts)
    : m_ideal(std::move(i)), m_opts(std::move(opts)), m_anchored(anchor(m_ideal))
{
    if (m_ideal.is_principal()) {
        throw principal_ideal_error();
    }
    m_profile = profile_for(m_anchored, m_opts);
    m_bounds = bounds_for(m_anchored.ideal, m_profile, m_opts);
}

const stable_decomposition &power_engine::decomposition(std::stop_token stop)
{
    if (!m_dec) {
        m_dec = make_stable_decomposition(m_ideal, m_opts, stop);
    }
    return *m_dec;
}

power_engine::route power_engine::route_for(exponent n) const
{
    if (n == 0) {
        throw precondition_error("power requires n >= 1");
    }
    return n < m_bounds.d ? route::naive : (n < m_bounds.s ? route::decomposed : route::assembled);
}

monomial_ideal power_engine::operator()(exponent n, std::stop_token stop)
{
    switch (route_for(n)) {
        case route::naive:
            return naive_power(m_ideal, n, stop);
        case route::decomposed: {
            // Works on the anchored ideal so the profile generators match.
            auto p = decomposed_power(m_anchored.ideal, m_profile, n, stop, m_bounds.d);
            return shift(p, pow(m_anchored.shift, n));
        }
        case route::assembled:
            break;
    }
    return assemble_power(decomposition(stop), n, nullptr, stop);
}

monomial_ideal power(const monomial_ideal &i, exponent n)
{
    power_engine engine(i);
    return engine(n);
}

} // namespace monpow
