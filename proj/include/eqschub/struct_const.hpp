#pragma once

#include "eqschub/factorial_schur.hpp"

namespace eqschub {

// Expansion of a symmetric polynomial in the factorial Schur basis; zero
// coefficients are never stored.
struct factorial_expansion {
    std::map<partition, poly> coeffs;

    void add(const partition& nu, const poly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs.emplace(nu, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    poly coeff(const partition& nu) const {
        auto it = coeffs.find(nu);
        return it == coeffs.end() ? poly::zero() : it->second;
    }

    friend bool operator==(const factorial_expansion&, const factorial_expansion&) = default;

    std::string str() const;
};

// Writes f as sum of coeffs[nu] * s_nu(x|a) by repeatedly cancelling the
// lex-leading monomial of the top x-degree slice; the (degree, leading
// exponent) pair strictly decreases, which is also enforced as a guard.
factorial_expansion expand_in_basis(const poly& f, schur_context& ctx);
factorial_expansion expand_in_basis(const poly& f, const parameter_sequence& a, int p);

// Structure constants by expanding the product of two Schur values.
factorial_expansion flr_peel(const partition& lam, const partition& mu, schur_context& ctx);
factorial_expansion flr_peel(const partition& lam, const partition& mu, const parameter_sequence& a,
                             int p);

// The same constants by the triangular evaluation solve over a generic
// sequence: evaluate the product at the distinguished points in increasing
// weight and divide by the nonvanishing diagonal pivots.  Candidate support
// is {nu : lam, mu contained in nu, |nu| <= |lam|+|mu|, length <= p}.
factorial_expansion flr_vanish(const partition& lam, const partition& mu, int p);
factorial_expansion flr_vanish(const partition& lam, const partition& mu, int p, int window_lo,
                               int window_hi);

// Independent combinatorial oracle: counts column-strict skew tableaux of
// shape nu/lam with content mu whose reverse reading word is a lattice word.
long long classical_lr(const partition& lam, const partition& mu, const partition& nu);

// Closed-form product with the single-box class: one-box additions with
// coefficient 1 (length capped at p, parts uncapped) plus the diagonal
// coefficient on lam itself.
factorial_expansion pieri_factorial(const partition& lam, const parameter_sequence& a, int p);

// Peeling vs triangular solve on every ordered pair in the p x cols
// rectangle, plus the closed-form Pieri cross-check.
check_report run_flr_agreement(int p, int cols);

// Peeling at the zero sequence vs the combinatorial oracle for all pairs of
// weight at most max_weight and length at most p.
check_report run_classical_conformance(int p, int max_weight);

} // namespace eqschub
