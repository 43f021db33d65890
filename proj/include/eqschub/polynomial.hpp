#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "eqschub/monomial.hpp"
#include "eqschub/numeric.hpp"

namespace eqschub {

namespace detail {

// Exact coefficient quotient; reports failure instead of rounding.
inline bool coeff_quotient(const ZZ& num, const ZZ& den, ZZ& out) {
    if (den == 0) throw internal_error("division by zero coefficient");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return true;
}

inline bool coeff_quotient(const QQ& num, const QQ& den, QQ& out) {
    if (den == 0) throw internal_error("division by zero coefficient");
    out = num / den;
    return true;
}

inline std::string coeff_str(const ZZ& c) { return c.get_str(); }
inline std::string coeff_str(const QQ& c) { return c.get_str(); }

} // namespace detail

// Sparse multivariate polynomial with exact coefficients, stored with the
// canonically-first term at begin().  All operations keep the zero-free
// normal form, so equality is structural.
template <class C>
class polynomial_t {
public:
    using coeff_type = C;
    using term_map = std::map<monomial, C, term_order>;

    polynomial_t() = default;

    static polynomial_t zero() { return {}; }

    static polynomial_t constant(C c) {
        polynomial_t f;
        if (c != 0) f.terms_.emplace(monomial::unit(), std::move(c));
        return f;
    }

    static polynomial_t term(monomial m, C c) {
        polynomial_t f;
        if (c != 0) f.terms_.emplace(std::move(m), std::move(c));
        return f;
    }

    static polynomial_t var(variable v, int k = 1) { return term(monomial::of(v, k), C(1)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t n_terms() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    C coeff(const monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    const std::pair<const monomial, C>& leading() const {
        if (terms_.empty()) throw internal_error("leading term of the zero polynomial");
        return *terms_.begin();
    }

    void add_term(const monomial& m, const C& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    polynomial_t& operator+=(const polynomial_t& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    polynomial_t& operator-=(const polynomial_t& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    polynomial_t operator-() const {
        polynomial_t r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    polynomial_t& operator*=(const C& s) {
        if (s == 0) terms_.clear();
        else
            for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend polynomial_t operator+(polynomial_t f, const polynomial_t& g) { return f += g; }
    friend polynomial_t operator-(polynomial_t f, const polynomial_t& g) { return f -= g; }

    friend polynomial_t operator*(const polynomial_t& f, const polynomial_t& g) {
        polynomial_t r;
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_) {
                auto [it, fresh] = r.terms_.emplace(mf * mg, C(0));
                it->second += cf * cg;
            }
        for (auto it = r.terms_.begin(); it != r.terms_.end();)
            it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
        return r;
    }

    friend polynomial_t operator*(polynomial_t f, const C& s) { return f *= s; }
    friend polynomial_t operator*(const C& s, polynomial_t f) { return f *= s; }

    friend bool operator==(const polynomial_t&, const polynomial_t&) = default;

    // Largest plain degree over all terms; -1 for the zero polynomial.
    int total_deg() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
        return d;
    }

    int deg(variable v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.deg(v));
        return d;
    }

    int deg(family f) const {
        int d = is_zero() ? -1 : 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.deg(f));
        return d;
    }

    // The common weighted grade of all terms, or nullopt when mixed.  The
    // zero polynomial is homogeneous of every grade; it reports grade 0.
    std::optional<int> homogeneous_grade(const grading& g) const {
        if (is_zero()) return 0;
        std::optional<int> r;
        for (const auto& [m, c] : terms_) {
            int d = m.grade(g);
            if (!r) r = d;
            else if (*r != d) return std::nullopt;
        }
        return r;
    }

    polynomial_t substitute(const std::map<variable, polynomial_t>& images) const {
        std::map<variable, std::vector<polynomial_t>> powers;
        polynomial_t out;
        for (const auto& [m, c] : terms_) {
            polynomial_t acc = constant(c);
            for (const auto& [v, k] : m.exponents()) {
                auto img = images.find(v);
                if (img == images.end()) {
                    acc = acc * var(v, k);
                    continue;
                }
                auto& pw = powers[v];
                if (pw.empty()) pw.push_back(constant(C(1)));
                while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * img->second);
                acc = acc * pw[k];
            }
            out += acc;
        }
        return out;
    }

    // Exact division: returns f/g when g divides f, nullopt otherwise.
    // Leading-term cancellation in the canonical order; on exact inputs the
    // leading monomial strictly decreases, so this terminates.
    std::optional<polynomial_t> divide_exact(const polynomial_t& g) const {
        if (g.is_zero()) throw internal_error("exact division by the zero polynomial");
        polynomial_t q, r(*this);
        const auto& [gm, gc] = g.leading();
        while (!r.is_zero()) {
            const auto& [rm, rc] = r.leading();
            auto m = rm.divide(gm);
            if (!m) return std::nullopt;
            C c;
            if (!detail::coeff_quotient(rc, gc, c)) return std::nullopt;
            polynomial_t t = term(*m, c);
            q += t;
            r -= t * g;
        }
        return q;
    }

    std::string str() const;
    static polynomial_t parse(const std::string& text);

private:
    term_map terms_;
};

using poly = polynomial_t<ZZ>;
using polyq = polynomial_t<QQ>;

template <class C>
polynomial_t<C> pow(const polynomial_t<C>& f, int k) {
    if (k < 0) throw internal_error("negative power of a polynomial");
    polynomial_t<C> r = polynomial_t<C>::constant(C(1));
    for (int i = 0; i < k; ++i) r = r * f;
    return r;
}

inline polyq rationalize(const poly& f) {
    polyq r;
    for (const auto& [m, c] : f.terms()) r.add_term(m, QQ(c));
    return r;
}

// Checked conversion back to integer coefficients.
inline poly integralize(const polyq& f) {
    poly r;
    for (const auto& [m, c] : f.terms()) r.add_term(m, to_integer(c));
    return r;
}

// ---- rendering ------------------------------------------------------------

template <class C>
std::string polynomial_t<C>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        C mag = neg ? C(-c) : c;
        // Print order: T, q, x, h, e, a; ascending index within a family.
        std::vector<monomial::entry> vars(m.exponents());
        std::sort(vars.begin(), vars.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        std::string body;
        for (const auto& [v, k] : vars) {
            if (!body.empty()) body += "*";
            body += name(v);
            if (k > 1) body += "^" + std::to_string(k);
        }
        if (body.empty()) out += detail::coeff_str(mag);
        else if (mag == 1) out += body;
        else out += detail::coeff_str(mag) + "*" + body;
    }
    return out;
}

// ---- parsing --------------------------------------------------------------

namespace detail {

struct poly_lexer {
    const std::string& s;
    std::size_t i = 0;

    explicit poly_lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }

    bool done() {
        skip_ws();
        return i >= s.size();
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }

    std::string digits() {
        skip_ws();
        std::string d;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') d += s[i++];
        return d;
    }

    int index(bool allow_negative) {
        skip_ws();
        bool neg = false;
        if (allow_negative && i < s.size() && s[i] == '-' && i + 1 < s.size() && s[i + 1] >= '0' &&
            s[i + 1] <= '9') {
            neg = true;
            ++i;
        }
        std::string d = digits();
        if (d.empty()) throw usage_error("expected a variable index in polynomial text");
        int v = std::stoi(d);
        return neg ? -v : v;
    }
};

inline std::optional<family> family_of_letter(char c) {
    switch (c) {
    case 'T': return family::T;
    case 'q': return family::q;
    case 'x': return family::x;
    case 'h': return family::h;
    case 'e': return family::e;
    case 'a': return family::a;
    default: return std::nullopt;
    }
}

} // namespace detail

template <class C>
polynomial_t<C> polynomial_t<C>::parse(const std::string& text) {
    detail::poly_lexer lx(text);
    polynomial_t out;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.eat('+')) sign = 1;
        else if (lx.eat('-')) sign = -1;
        else if (!first) throw usage_error("expected '+' or '-' in polynomial text: " + text);
        first = false;

        C coeff(1);
        monomial m;
        bool saw_factor = false;
        for (;;) {
            char c = lx.peek();
            if (c >= '0' && c <= '9') {
                std::string d = lx.digits();
                coeff *= C(d.c_str());
                saw_factor = true;
            } else if (auto fam = detail::family_of_letter(c)) {
                ++lx.i;
                int idx = (*fam == family::q) ? 0 : lx.index(*fam == family::a);
                int k = 1;
                if (lx.eat('^')) {
                    std::string d = lx.digits();
                    if (d.empty()) throw usage_error("expected an exponent in polynomial text");
                    k = std::stoi(d);
                }
                m = m * monomial::of({*fam, idx}, k);
                saw_factor = true;
            } else {
                throw usage_error("unexpected character in polynomial text: " + text);
            }
            if (!lx.eat('*')) break;
        }
        if (!saw_factor) throw usage_error("empty term in polynomial text: " + text);
        if (sign < 0) coeff = -coeff;
        out.add_term(m, coeff);
    }
    return out;
}

} // namespace eqschub
