#pragma once

#include <vector>

#include "eqschub/polynomial.hpp"

namespace eqschub {

// Block term order used by the Groebner cross-check: monomials compare first
// by the graded-lex order on the generator block (h, e, x) and then by the
// graded-lex order on the coefficient block (q, T, a).  Both blocks break
// grade ties with the canonical scan-order lex.
class block_order {
public:
    explicit block_order(grading g) : g_(g) {}

    // >0 when a is larger, <0 when b is larger, 0 on equality.
    int cmp3(const monomial& a, const monomial& b) const;
    bool less(const monomial& a, const monomial& b) const { return cmp3(a, b) < 0; }

private:
    static monomial generator_block(const monomial& m);
    grading g_;
};

struct gb_options {
    int max_basis = 400;          // generators kept in the evolving basis
    long long max_pairs = 20000;  // critical pairs processed
    int max_total_deg = 60;       // degree of any intermediate remainder
};

// Leading term of f under the block order; f must be nonzero.
std::pair<monomial, QQ> leading_term(const polyq& f, const block_order& ord);

// Full reduction of f modulo G: every term divisible by some leading
// monomial of G is eliminated.
polyq normal_form(polyq f, const std::vector<polyq>& G, const block_order& ord);

// Buchberger's algorithm with the coprimality criterion; remainders are made
// monic.  Throws resource_limit_exceeded beyond the configured limits.
std::vector<polyq> buchberger(std::vector<polyq> gens, const block_order& ord,
                              const gb_options& opt = {});

} // namespace eqschub
