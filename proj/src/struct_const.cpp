#include "eqschub/struct_const.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace eqschub {

std::string factorial_expansion::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [nu, c] : coeffs) {
        if (!out.empty()) out += " + ";
        const std::string cs = c.str();
        const bool wrap = c.n_terms() > 1 || cs.front() == '-';
        out += nu.bracket() + "·" + (wrap ? "(" + cs + ")" : cs);
    }
    return out;
}

namespace {

// Exponents of x_1..x_p in a monomial, as a vector.
std::vector<int> x_exponents(const monomial& m, int p) {
    std::vector<int> e(p, 0);
    for (const auto& [v, k] : m.exponents())
        if (v.fam == family::x) {
            if (v.idx < 1 || v.idx > p) throw internal_error("x-variable outside 1..p");
            e[v.idx - 1] = k;
        }
    return e;
}

} // namespace

factorial_expansion expand_in_basis(const poly& f0, schur_context& ctx) {
    const int p = ctx.rows();
    factorial_expansion out;
    poly f = f0;
    int prev_deg = -1;
    monomial prev_lead;
    bool first = true;

    while (!f.is_zero()) {
        int dx = 0;
        for (const auto& [m, c] : f.terms()) dx = std::max(dx, m.deg(family::x));

        monomial lead;
        bool have_lead = false;
        for (const auto& [m, c] : f.terms()) {
            if (m.deg(family::x) != dx) continue;
            monomial xm = m.part(family::x);
            if (!have_lead || cmp(xm, lead) > 0) {
                lead = xm;
                have_lead = true;
            }
        }

        std::vector<int> exps = x_exponents(lead, p);
        for (std::size_t i = 1; i < exps.size(); ++i)
            if (exps[i] > exps[i - 1])
                throw internal_error("basis expansion needs a symmetric input");

        if (!first && !(dx < prev_deg || (dx == prev_deg && cmp(lead, prev_lead) < 0)))
            throw internal_error("basis expansion failed to descend");
        first = false;
        prev_deg = dx;
        prev_lead = lead;

        partition kappa(std::move(exps));
        poly c;
        for (const auto& [m, co] : f.terms())
            if (m.part(family::x) == lead) c.add_term(m.without(family::x), co);

        out.add(kappa, c);
        f -= c * ctx.ratio(kappa);
    }
    return out;
}

factorial_expansion expand_in_basis(const poly& f, const parameter_sequence& a, int p) {
    schur_context ctx(a, p);
    return expand_in_basis(f, ctx);
}

factorial_expansion flr_peel(const partition& lam, const partition& mu, schur_context& ctx) {
    return expand_in_basis(ctx.ratio(lam) * ctx.ratio(mu), ctx);
}

factorial_expansion flr_peel(const partition& lam, const partition& mu, const parameter_sequence& a,
                             int p) {
    schur_context ctx(a, p);
    return flr_peel(lam, mu, ctx);
}

namespace {

using eval_cache = std::map<std::pair<partition, partition>, poly>;

const poly& eval_memo(schur_context& ctx, eval_cache& cache, const partition& nu,
                      const partition& rho) {
    auto key = std::make_pair(nu, rho);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache
                 .emplace(key,
                          eval_at_partition(ctx.ratio(nu), rho, ctx.sequence(), ctx.rows()))
                 .first;
    return it->second;
}

factorial_expansion flr_vanish_in(const partition& lam, const partition& mu, schur_context& ctx,
                                  eval_cache& cache) {
    const int p = ctx.rows();
    if (lam.length() > p || mu.length() > p) throw usage_error("partition longer than p");
    if (!ctx.sequence().strict())
        throw usage_error("the evaluation solve needs a generic sequence");

    std::vector<partition> candidates;
    for (const partition& nu : enumerate_weight_at_most(p, lam.weight() + mu.weight()))
        if (nu.contains(lam) && nu.contains(mu)) candidates.push_back(nu);

    factorial_expansion out;
    for (const partition& rho : candidates) {
        poly rhs = eval_memo(ctx, cache, lam, rho) * eval_memo(ctx, cache, mu, rho);
        for (const auto& [nu, c] : out.coeffs)
            if (rho.contains(nu)) rhs -= c * eval_memo(ctx, cache, nu, rho);
        if (rhs.is_zero()) continue;
        auto c = rhs.divide_exact(eval_memo(ctx, cache, rho, rho));
        if (!c) throw internal_error("evaluation solve: non-exact pivot division at rho=" + rho.str());
        out.add(rho, *c);
    }
    return out;
}

} // namespace

factorial_expansion flr_vanish(const partition& lam, const partition& mu, int p, int window_lo,
                               int window_hi) {
    schur_context ctx(parameter_sequence::generic(window_lo, window_hi), p);
    eval_cache cache;
    return flr_vanish_in(lam, mu, ctx, cache);
}

factorial_expansion flr_vanish(const partition& lam, const partition& mu, int p) {
    return flr_vanish(lam, mu, p, 1 - p, lam.weight() + mu.weight() + p + 1);
}

long long classical_lr(const partition& lam, const partition& mu, const partition& nu) {
    if (lam.weight() + mu.weight() != nu.weight()) return 0;
    if (!nu.contains(lam)) return 0;
    const int rows = nu.length();
    const int letters = mu.length();

    // Boxes of nu/lam in reading order: top row first, right to left.
    std::vector<std::pair<int, int>> boxes; // (row, col), 1-based
    for (int i = 1; i <= rows; ++i)
        for (int j = nu.part(i); j > lam.part(i); --j) boxes.push_back({i, j});

    std::vector<std::vector<int>> grid(rows + 1, std::vector<int>(nu.part(1) + 2, 0));
    std::vector<int> used(letters + 1, 0);
    long long count = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == boxes.size()) {
            ++count;
            return;
        }
        const auto [i, j] = boxes[b];
        const int right = j < nu.part(i) ? grid[i][j + 1] : letters; // row weakly increasing
        for (int t = 1; t <= right; ++t) {
            if (used[t] >= mu.part(t)) continue;
            if (t > 1 && used[t] >= used[t - 1]) continue; // lattice word prefix
            // Column strict below a filled box; boxes of lam are absent and
            // impose no bound.
            if (i > 1 && j <= nu.part(i - 1) && j > lam.part(i - 1) && grid[i - 1][j] >= t) continue;
            grid[i][j] = t;
            ++used[t];
            rec(b + 1);
            --used[t];
            grid[i][j] = 0;
        }
    };
    rec(0);
    return count;
}

factorial_expansion pieri_factorial(const partition& lam, const parameter_sequence& a, int p) {
    if (lam.length() > p) throw usage_error("partition longer than p");
    factorial_expansion out;
    for (const partition& mu : add_one_box(lam, p, std::numeric_limits<int>::max()))
        out.add(mu, poly::constant(1));
    out.add(lam, chevalley_coeff(lam, a, p));
    return out;
}

check_report run_flr_agreement(int p, int cols) {
    check_report rep;
    const int wmax = 2 * p * cols;
    schur_context ctx(parameter_sequence::generic(1 - p, wmax + p + 1), p);
    eval_cache cache;
    const grassmann_shape box(p, p + cols);
    const std::vector<partition> all = enumerate_rectangle(box);

    for (const partition& lam : all)
        for (const partition& mu : all) {
            const std::string inst = "lam=" + lam.str() + " mu=" + mu.str();
            factorial_expansion peel = flr_peel(lam, mu, ctx);
            factorial_expansion vanish = flr_vanish_in(lam, mu, ctx, cache);
            const bool ok = peel == vanish;
            rep.add("peel vs evaluation solve", inst, ok,
                    ok ? "" : "peel " + peel.str() + " / solve " + vanish.str());
        }

    for (const partition& lam : all) {
        factorial_expansion lhs = flr_peel(lam, partition::parse("1"), ctx);
        factorial_expansion rhs = pieri_factorial(lam, ctx.sequence(), p);
        const bool ok = lhs == rhs;
        rep.add("single-box closed form", "lam=" + lam.str(), ok,
                ok ? "" : "peel " + lhs.str() + " / closed " + rhs.str());
    }
    return rep;
}

check_report run_classical_conformance(int p, int max_weight) {
    check_report rep;
    schur_context ctx(parameter_sequence::zeros(), p);
    const std::vector<partition> all = enumerate_weight_at_most(p, max_weight);

    for (const partition& lam : all)
        for (const partition& mu : all) {
            factorial_expansion prod = flr_peel(lam, mu, ctx);
            bool ok = true;
            std::string detail;
            for (const partition& nu : enumerate_weight_at_most(p, lam.weight() + mu.weight())) {
                if (nu.weight() != lam.weight() + mu.weight()) continue;
                const poly expect = poly::constant(ZZ(static_cast<long>(classical_lr(lam, mu, nu))));
                if (prod.coeff(nu) != expect) {
                    ok = false;
                    detail = "nu=" + nu.str() + " peel " + prod.coeff(nu).str() + " oracle " +
                             expect.str();
                    break;
                }
            }
            rep.add("classical oracle", "lam=" + lam.str() + " mu=" + mu.str(), ok, detail);
        }
    return rep;
}

} // namespace eqschub
