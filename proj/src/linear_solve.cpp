#include "eqschub/linear_solve.hpp"

#include <string>

namespace eqschub {

namespace {

struct echelon {
    std::vector<std::vector<QQ>> mat; // reduced rows, width n_unknowns + 1
    std::vector<int> pivot_columns;   // pivot_columns[r] is the pivot of row r
};

// Reduced row echelon form of [A | b].  Column order decides pivots.
echelon reduce(const linear_system& sys) {
    const int n = sys.n_unknowns;
    std::vector<std::vector<QQ>> mat;
    mat.reserve(sys.rows.size());
    for (const auto& row : sys.rows) {
        std::vector<QQ> dense(n + 1, QQ(0));
        for (const auto& [j, c] : row.lhs) {
            if (j < 0 || j >= n) throw internal_error("linear system column out of range");
            dense[j] += c;
        }
        dense[n] = row.rhs;
        mat.push_back(std::move(dense));
    }

    echelon ech;
    int next = 0;
    const int n_rows = static_cast<int>(mat.size());
    for (int col = 0; col < n && next < n_rows; ++col) {
        int piv = -1;
        for (int r = next; r < n_rows; ++r)
            if (mat[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(mat[next], mat[piv]);
        const QQ lead = mat[next][col];
        for (int j = col; j <= n; ++j) mat[next][j] /= lead;
        for (int r = 0; r < n_rows; ++r) {
            if (r == next || mat[r][col] == 0) continue;
            const QQ f = mat[r][col];
            for (int j = col; j <= n; ++j) mat[r][j] -= f * mat[next][j];
        }
        ech.pivot_columns.push_back(col);
        ++next;
    }
    ech.mat = std::move(mat); // zero rows stay for the consistency scan
    return ech;
}

} // namespace

linear_solution solve_exact(const linear_system& sys) {
    const int n = sys.n_unknowns;
    echelon ech = reduce(sys);

    const int rank = static_cast<int>(ech.pivot_columns.size());
    for (std::size_t r = rank; r < ech.mat.size(); ++r)
        if (ech.mat[r][n] != 0)
            throw inconsistent_system("linear system has no solution (row " + std::to_string(r) + ")");

    linear_solution sol;
    sol.value.assign(n, QQ(0));
    for (int r = 0; r < rank; ++r) sol.value[ech.pivot_columns[r]] = ech.mat[r][n];
    sol.pivot_columns = ech.pivot_columns;
    sol.kernel_rank = n - rank;

    // Exactness is only as good as the elimination; re-check every input row.
    for (const auto& row : sys.rows) {
        QQ acc(0);
        for (const auto& [j, c] : row.lhs) acc += c * sol.value[j];
        if (acc != row.rhs) throw internal_error("linear solve verification failed");
    }
    return sol;
}

std::vector<std::vector<QQ>> kernel_basis(const linear_system& sys) {
    const int n = sys.n_unknowns;
    linear_system homo(n);
    for (const auto& row : sys.rows) homo.add_row(row.lhs, QQ(0));
    echelon ech = reduce(homo);

    std::vector<bool> is_pivot(n, false);
    for (int col : ech.pivot_columns) is_pivot[col] = true;

    std::vector<std::vector<QQ>> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<QQ> vec(n, QQ(0));
        vec[f] = 1;
        for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r)
            vec[ech.pivot_columns[r]] = -ech.mat[r][f];
        basis.push_back(std::move(vec));
    }

    // Every basis vector must satisfy the homogeneous system exactly.
    for (const auto& vec : basis)
        for (const auto& row : sys.rows) {
            QQ acc(0);
            for (const auto& [j, c] : row.lhs) acc += c * vec[j];
            if (acc != 0) throw internal_error("kernel basis verification failed");
        }
    return basis;
}

} // namespace eqschub
