#pragma once

#include <map>
#include <vector>

#include "eqschub/parameter_sequence.hpp"
#include "eqschub/report.hpp"

namespace eqschub {

// Generalized factorial power (y|a)^k = (y - a_1)(y - a_2)...(y - a_k).
poly factorial_power(variable y, const parameter_sequence& a, int k);

// Factorial complete homogeneous polynomial in x_1..x_p:
//   h_k(x|a) = sum over 1 <= i_1 <= ... <= i_k <= p of
//              prod_r (x_{i_r} - a_{i_r + r - 1});
// zero for k < 0, one for k = 0.
poly h_factorial(int k, const parameter_sequence& a, int p);

// Factorial elementary polynomial in x_1..x_p: sum over strictly increasing
// index tuples i_1 < ... < i_k <= p of prod_r (x_{i_r} - a_{i_r - r + 1});
// zero for k < 0 or k > p.  Normatively pinned to equal the ratio
// construction of the column partition (1^k), which the tests enforce.
poly e_factorial(int k, const parameter_sequence& a, int p);

// Determinant of a square polynomial matrix (expansion over column subsets,
// memoized per row level; zero entries pruned).
poly determinant(const std::vector<std::vector<poly>>& mat);

// Factorial Schur polynomial as the exact ratio
//   det[(x_j|a)^{lam_i + p - i}] / det[(x_j|a)^{p - i}],
// the denominator being the Vandermonde determinant of x_1..x_p.
poly schur_ratio(const partition& lam, const parameter_sequence& a, int p);

// The same function via the h-determinant det[h_{lam_i - i + j}(x|shift(1-j) a)].
poly schur_jt_h(const partition& lam, const parameter_sequence& a, int p);

// ... and via the e-determinant det[e_{lam'_i - i + j}(x|shift(j-1) a)] of
// size cols x cols; any cols >= lam_1 gives the same value.
poly schur_jt_e(const partition& lam, const parameter_sequence& a, int p, int cols);

// Substitute x_i := a_{rho_i + p + 1 - i}.
poly eval_at_partition(const poly& f, const partition& rho, const parameter_sequence& a, int p);

// Closed form for eval_at_partition(schur_ratio(lam), lam):
//   prod over boxes (i,j) of lam of (a_{lam_i + p - i + 1} - a_{p - lam'_j + j}).
poly diagonal_value(const partition& lam, const parameter_sequence& a, int p);

// The coefficient of s_lam in s_(1) * s_lam:
//   sum_i a_{lam_i + p + 1 - i} - sum_{j=1}^p a_j.
poly chevalley_coeff(const partition& lam, const parameter_sequence& a, int p);

bool is_symmetric_in_x(const poly& f, int p);

// Memoizes Schur values against one fixed sequence.  Not thread-safe: use
// one per thread.
class schur_context {
public:
    schur_context(parameter_sequence a, int p) : a_(std::move(a)), p_(p) {}

    const poly& ratio(const partition& lam);
    const parameter_sequence& sequence() const { return a_; }
    int rows() const { return p_; }

private:
    parameter_sequence a_;
    int p_;
    std::map<partition, poly> cache_;
};

// Exact polynomial identities over a generic window: the h/e shift
// recurrences, the alternating Cauchy sum for s = 1..s_max, and the vanishing
// of the oversized h-determinant for p < k <= s_max.  The window must reach
// every index those identities touch, or a usage_error is raised.
check_report run_identity_suite(int p, int s_max, int window_lo, int window_hi);

// Agreement of the three Schur constructions (ratio, h-determinant,
// e-determinant at two different sizes) for every lam in rows x cols with at
// most p_max rows, for each p = 1..p_max.
check_report run_schur_agreement(int p_max, int rows, int cols, int window_lo, int window_hi);

// Evaluation table over lam, rho in the p x cols rectangle: zero whenever
// lam is not contained in rho, and the closed-form diagonal value when
// lam = rho.
check_report run_vanishing_table(int p, int cols);

} // namespace eqschub
