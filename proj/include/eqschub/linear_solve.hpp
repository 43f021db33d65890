#pragma once

#include <vector>

#include "eqschub/numeric.hpp"

namespace eqschub {

// Exact rational linear system  A x = b  with unknowns indexed 0..n-1.
// Rows are entered sparsely; duplicate column entries accumulate.
struct linear_system {
    struct row {
        std::vector<std::pair<int, QQ>> lhs;
        QQ rhs;
    };

    int n_unknowns = 0;
    std::vector<row> rows;

    explicit linear_system(int n) : n_unknowns(n) {
        if (n < 0) throw internal_error("linear system with negative size");
    }

    void add_row(std::vector<std::pair<int, QQ>> lhs, QQ rhs) {
        rows.push_back({std::move(lhs), std::move(rhs)});
    }
};

struct linear_solution {
    std::vector<QQ> value;          // one exact solution, free unknowns set to zero
    std::vector<int> pivot_columns; // ascending
    int kernel_rank = 0;            // n_unknowns - rank(A)
};

// Gauss-Jordan elimination over the rationals, pivots chosen in column order.
// Throws inconsistent_system when no solution exists.  The returned solution
// is re-substituted into every input row before being handed back.
linear_solution solve_exact(const linear_system& sys);

// Basis of the solution space of A x = 0, one vector per free column.
std::vector<std::vector<QQ>> kernel_basis(const linear_system& sys);

} // namespace eqschub
