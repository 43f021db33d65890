#include "eqschub/generators.hpp"

#include "eqschub/factorial_schur.hpp"

namespace eqschub {

namespace {

// Memoized double recursion over (shift, index).
poly tau_rec(int s, int j, const grassmann_shape& shape, bool h_side,
             std::map<std::pair<int, int>, poly>& memo) {
    if (j < 0) return poly::zero();
    if (j == 0) return poly::constant(1);
    const int top = h_side ? shape.cols() : shape.p;
    if (s == 0) return j <= top ? poly::var(h_side ? h_(j) : e_(j)) : poly::zero();

    auto key = std::make_pair(s, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const parameter_sequence t = make_t(shape);
    poly factor = h_side ? t.term(j + shape.p - s) - t.term(1 - s)
                         : t.term(s) - t.term(shape.p - j + s + 1);
    poly out = tau_rec(s - 1, j, shape, h_side, memo) +
               factor * tau_rec(s - 1, j - 1, shape, h_side, memo);
    return memo.emplace(key, std::move(out)).first->second;
}

} // namespace

poly tau_h(int s, int j, const grassmann_shape& shape) {
    if (s < 0) throw usage_error("tau_h needs a nonnegative shift");
    std::map<std::pair<int, int>, poly> memo;
    return tau_rec(s, j, shape, /*h_side=*/true, memo);
}

poly tau_e(int s, int i, const grassmann_shape& shape) {
    if (s < 0) throw usage_error("tau_e needs a nonnegative shift");
    std::map<std::pair<int, int>, poly> memo;
    return tau_rec(s, i, shape, /*h_side=*/false, memo);
}

poly giambelli_h(const partition& lam, const grassmann_shape& shape) {
    if (!shape.holds(lam)) throw usage_error("class partition outside the rectangle");
    const int p = shape.p;
    std::map<std::pair<int, int>, poly> memo;
    std::vector<std::vector<poly>> mat(p, std::vector<poly>(p));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            mat[i - 1][j - 1] = tau_rec(j - 1, lam.part(i) + j - i, shape, true, memo);
    return determinant(mat);
}

poly giambelli_e(const partition& lam, const grassmann_shape& shape, int cols) {
    if (lam.length() > shape.p) throw usage_error("partition longer than p");
    const int min_cols = std::max(shape.cols(), lam.part(1));
    if (cols == 0) cols = min_cols;
    if (cols < min_cols) throw usage_error("e-determinant size below max(m-p, first part)");
    const partition conj = lam.conjugate();
    std::map<std::pair<int, int>, poly> memo;
    std::vector<std::vector<poly>> mat(cols, std::vector<poly>(cols));
    for (int i = 1; i <= cols; ++i)
        for (int j = 1; j <= cols; ++j)
            mat[i - 1][j - 1] = tau_rec(j - 1, conj.part(i) + j - i, shape, false, memo);
    return determinant(mat);
}

poly cap_E(int k, const grassmann_shape& shape) {
    if (k <= shape.p || k > shape.m) throw usage_error("cap_E index must satisfy p < k <= m");
    std::map<std::pair<int, int>, poly> memo;
    std::vector<std::vector<poly>> mat(k, std::vector<poly>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            mat[i - 1][j - 1] = tau_rec(j - 1, 1 + j - i, shape, true, memo);
    return determinant(mat);
}

poly cap_H(int k, const grassmann_shape& shape) {
    if (k <= shape.cols() || k > shape.m) throw usage_error("cap_H index must satisfy m-p < k <= m");
    std::map<std::pair<int, int>, poly> memo;
    std::vector<std::vector<poly>> mat(k, std::vector<poly>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            mat[i - 1][j - 1] = tau_rec(j - 1, 1 + j - i, shape, false, memo);
    return determinant(mat);
}

} // namespace eqschub
