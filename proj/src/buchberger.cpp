#include "eqschub/buchberger.hpp"

#include <deque>

namespace eqschub {

namespace {

bool in_generator_block(family f) {
    return f == family::h || f == family::e || f == family::x;
}

monomial lcm(const monomial& a, const monomial& b) {
    monomial r = a;
    for (const auto& [v, k] : b.exponents()) {
        const int have = r.deg(v);
        if (k > have) r = r * monomial::of(v, k - have);
    }
    return r;
}

bool coprime(const monomial& a, const monomial& b) {
    for (const auto& [v, k] : a.exponents())
        if (b.deg(v) > 0) return false;
    return true;
}

} // namespace

monomial block_order::generator_block(const monomial& m) {
    monomial r;
    for (const auto& [v, k] : m.exponents())
        if (in_generator_block(v.fam)) r = r * monomial::of(v, k);
    return r;
}

int block_order::cmp3(const monomial& a, const monomial& b) const {
    const monomial ag = generator_block(a), bg = generator_block(b);
    int da = ag.grade(g_), db = bg.grade(g_);
    if (da != db) return da > db ? 1 : -1;
    if (int c = cmp(ag, bg); c != 0) return c;
    const monomial ar = a.divide(ag).value(), br = b.divide(bg).value();
    da = ar.grade(g_), db = br.grade(g_);
    if (da != db) return da > db ? 1 : -1;
    return cmp(ar, br);
}

std::pair<monomial, QQ> leading_term(const polyq& f, const block_order& ord) {
    if (f.is_zero()) throw internal_error("leading term of the zero polynomial");
    const monomial* best = nullptr;
    const QQ* bc = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || ord.cmp3(m, *best) > 0) {
            best = &m;
            bc = &c;
        }
    return {*best, *bc};
}

polyq normal_form(polyq f, const std::vector<polyq>& G, const block_order& ord) {
    std::vector<std::pair<monomial, QQ>> lead;
    lead.reserve(G.size());
    for (const polyq& g : G) lead.push_back(leading_term(g, ord));

    polyq out;
    while (!f.is_zero()) {
        auto [m, c] = leading_term(f, ord);
        bool reduced = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            auto quo = m.divide(lead[i].first);
            if (!quo) continue;
            f -= G[i] * polyq::term(*quo, c / lead[i].second);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.add_term(m, c);
            f -= polyq::term(m, c);
        }
    }
    return out;
}

std::vector<polyq> buchberger(std::vector<polyq> gens, const block_order& ord,
                              const gb_options& opt) {
    std::vector<polyq> G;
    for (polyq& g : gens) {
        if (g.is_zero()) continue;
        const auto lt = leading_term(g, ord);
        g *= QQ(1) / lt.second;
        G.push_back(std::move(g));
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pairs.push_back({i, j});

    long long processed = 0;
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (++processed > opt.max_pairs)
            throw resource_limit_exceeded("Groebner pair limit exceeded");

        const auto li = leading_term(G[i], ord), lj = leading_term(G[j], ord);
        if (coprime(li.first, lj.first)) continue;

        const monomial l = lcm(li.first, lj.first);
        polyq s = G[i] * polyq::term(l.divide(li.first).value(), QQ(1)) -
                  G[j] * polyq::term(l.divide(lj.first).value(), QQ(1));
        polyq r = normal_form(std::move(s), G, ord);
        if (r.is_zero()) continue;
        if (r.total_deg() > opt.max_total_deg)
            throw resource_limit_exceeded("Groebner remainder degree limit exceeded");

        const auto lt = leading_term(r, ord);
        r *= QQ(1) / lt.second;
        for (std::size_t k = 0; k < G.size(); ++k) pairs.push_back({k, G.size()});
        G.push_back(std::move(r));
        if (static_cast<int>(G.size()) > opt.max_basis)
            throw resource_limit_exceeded("Groebner basis size limit exceeded");
    }
    return G;
}

} // namespace eqschub
