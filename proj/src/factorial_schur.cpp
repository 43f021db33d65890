#include "eqschub/factorial_schur.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace eqschub {

poly factorial_power(variable y, const parameter_sequence& a, int k) {
    if (k < 0) throw usage_error("factorial power with negative exponent");
    poly out = poly::constant(1);
    for (int i = 1; i <= k; ++i) out = out * (poly::var(y) - a.term(i));
    return out;
}

namespace {

// Sum over index tuples of products of (x_{i_r} - a_{shift(i_r, r)}); the
// h-version uses weakly increasing tuples, the e-version strictly increasing.
poly tuple_sum(int k, const parameter_sequence& a, int p, bool strict) {
    poly out;
    std::function<void(int, int, const poly&)> rec = [&](int min_i, int r, const poly& acc) {
        if (r > k) {
            out += acc;
            return;
        }
        for (int i = min_i; i <= p; ++i) {
            const int pos = strict ? i - r + 1 : i + r - 1;
            rec(strict ? i + 1 : i, r + 1, acc * (poly::var(x_(i)) - a.term(pos)));
        }
    };
    rec(1, 1, poly::constant(1));
    return out;
}

} // namespace

poly h_factorial(int k, const parameter_sequence& a, int p) {
    if (k < 0) return poly::zero();
    if (k == 0) return poly::constant(1);
    return tuple_sum(k, a, p, /*strict=*/false);
}

poly e_factorial(int k, const parameter_sequence& a, int p) {
    if (k < 0 || k > p) return poly::zero();
    if (k == 0) return poly::constant(1);
    return tuple_sum(k, a, p, /*strict=*/true);
}

poly determinant(const std::vector<std::vector<poly>>& mat) {
    const int n = static_cast<int>(mat.size());
    for (const auto& row : mat)
        if (static_cast<int>(row.size()) != n) throw internal_error("determinant of a non-square matrix");
    if (n == 0) return poly::constant(1);
    if (n > 30) throw internal_error("determinant dimension out of range");

    // Minor over rows r.. and the column set encoded by mask; memoized per
    // row so only reachable column subsets are expanded.
    std::vector<std::unordered_map<std::uint32_t, poly>> memo(n + 1);
    std::function<const poly&(int, std::uint32_t)> minor = [&](int r, std::uint32_t mask) -> const poly& {
        auto& level = memo[r];
        auto it = level.find(mask);
        if (it != level.end()) return it->second;
        poly det;
        if (r == n) {
            det = poly::constant(1);
        } else {
            int pos = 0; // 0-based position of j within mask decides the cofactor sign
            for (int j = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                if (!mat[r][j].is_zero()) {
                    poly part = mat[r][j] * minor(r + 1, mask & ~(1u << j));
                    if (pos % 2) det -= part;
                    else det += part;
                }
                ++pos;
            }
        }
        return level.emplace(mask, std::move(det)).first->second;
    };
    return minor(0, (1u << n) - 1);
}

poly schur_ratio(const partition& lam, const parameter_sequence& a, int p) {
    if (p < 1) throw usage_error("schur functions need p >= 1");
    if (lam.length() > p) throw usage_error("partition longer than p");
    std::vector<std::vector<poly>> mat(p, std::vector<poly>(p));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            mat[i - 1][j - 1] = factorial_power(x_(j), a, lam.part(i) + p - i);
    poly num = determinant(mat);
    // The denominator determinant det[(x_j|a)^{p-i}] equals the plain
    // Vandermonde product, so divide out the linear factors one by one.
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            auto q = num.divide_exact(poly::var(x_(i)) - poly::var(x_(j)));
            if (!q) throw internal_error("schur ratio: non-exact Vandermonde division");
            num = std::move(*q);
        }
    return num;
}

poly schur_jt_h(const partition& lam, const parameter_sequence& a, int p) {
    if (p < 1) throw usage_error("schur functions need p >= 1");
    if (lam.length() > p) throw usage_error("partition longer than p");
    std::map<std::pair<int, int>, poly> entry_cache;
    auto entry = [&](int k, int shift) -> const poly& {
        auto key = std::make_pair(k, shift);
        auto it = entry_cache.find(key);
        if (it == entry_cache.end())
            it = entry_cache.emplace(key, h_factorial(k, a.shift(shift), p)).first;
        return it->second;
    };
    std::vector<std::vector<poly>> mat(p, std::vector<poly>(p));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j) mat[i - 1][j - 1] = entry(lam.part(i) - i + j, 1 - j);
    return determinant(mat);
}

poly schur_jt_e(const partition& lam, const parameter_sequence& a, int p, int cols) {
    if (p < 1) throw usage_error("schur functions need p >= 1");
    if (lam.length() > p) throw usage_error("partition longer than p");
    if (cols < lam.part(1)) throw usage_error("e-determinant smaller than the first part");
    const partition conj = lam.conjugate();
    std::map<std::pair<int, int>, poly> entry_cache;
    auto entry = [&](int k, int shift) -> const poly& {
        auto key = std::make_pair(k, shift);
        auto it = entry_cache.find(key);
        if (it == entry_cache.end())
            it = entry_cache.emplace(key, e_factorial(k, a.shift(shift), p)).first;
        return it->second;
    };
    std::vector<std::vector<poly>> mat(cols, std::vector<poly>(cols));
    for (int i = 1; i <= cols; ++i)
        for (int j = 1; j <= cols; ++j) mat[i - 1][j - 1] = entry(conj.part(i) - i + j, j - 1);
    return determinant(mat);
}

poly eval_at_partition(const poly& f, const partition& rho, const parameter_sequence& a, int p) {
    if (rho.length() > p) throw usage_error("evaluation partition longer than p");
    std::map<variable, poly> images;
    for (int i = 1; i <= p; ++i) images[x_(i)] = a.term(rho.part(i) + p + 1 - i);
    return f.substitute(images);
}

poly diagonal_value(const partition& lam, const parameter_sequence& a, int p) {
    if (lam.length() > p) throw usage_error("partition longer than p");
    const partition conj = lam.conjugate();
    poly out = poly::constant(1);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j)
            out = out * (a.term(lam.part(i) + p - i + 1) - a.term(p - conj.part(j) + j));
    return out;
}

poly chevalley_coeff(const partition& lam, const parameter_sequence& a, int p) {
    if (lam.length() > p) throw usage_error("partition longer than p");
    poly out;
    for (int i = 1; i <= p; ++i) out += a.term(lam.part(i) + p + 1 - i);
    for (int j = 1; j <= p; ++j) out -= a.term(j);
    return out;
}

bool is_symmetric_in_x(const poly& f, int p) {
    for (int i = 1; i < p; ++i) {
        std::map<variable, poly> swap_xy{{x_(i), poly::var(x_(i + 1))}, {x_(i + 1), poly::var(x_(i))}};
        if (f.substitute(swap_xy) != f) return false;
    }
    return true;
}

const poly& schur_context::ratio(const partition& lam) {
    auto it = cache_.find(lam);
    if (it == cache_.end()) it = cache_.emplace(lam, schur_ratio(lam, a_, p_)).first;
    return it->second;
}

namespace {

std::string short_str(const poly& f) {
    std::string s = f.str();
    if (s.size() > 120) s = s.substr(0, 117) + "...";
    return s;
}

void check_equal(check_report& rep, const std::string& name, const std::string& inst, const poly& lhs,
                 const poly& rhs) {
    const bool ok = lhs == rhs;
    rep.add(name, inst, ok, ok ? "" : "difference " + short_str(lhs - rhs));
}

} // namespace

check_report run_identity_suite(int p, int s_max, int window_lo, int window_hi) {
    if (p < 1 || s_max < 1) throw usage_error("identity suite needs p >= 1 and s_max >= 1");
    const int need_lo = std::min({0, 2 - s_max, 2 - p});
    const int need_hi = std::max(p + s_max - 1, p + 1);
    if (window_lo > need_lo || window_hi < need_hi)
        throw usage_error("identity suite window must cover " + std::to_string(need_lo) + ".." +
                          std::to_string(need_hi));
    const parameter_sequence a = parameter_sequence::generic(window_lo, window_hi);
    check_report rep;

    // h_{i+1} under one downward shift of the sequence.
    for (int i = 0; i < s_max; ++i) {
        poly lhs = h_factorial(i + 1, a.shift(-1), p);
        poly rhs = h_factorial(i + 1, a, p) + (a.term(i + p) - a.term(0)) * h_factorial(i, a, p);
        check_equal(rep, "h shift recurrence", "i=" + std::to_string(i), lhs, rhs);
    }

    // e_{j+1} under one upward shift.
    for (int j = 0; j < p; ++j) {
        poly lhs = e_factorial(j + 1, a.shift(1), p);
        poly rhs = e_factorial(j + 1, a, p) + (a.term(1) - a.term(p - j + 1)) * e_factorial(j, a, p);
        check_equal(rep, "e shift recurrence", "j=" + std::to_string(j), lhs, rhs);
    }

    // Alternating Cauchy sum: sum_r (-1)^r e_r(x|a) h_{s-r}(x|shift(1-s) a) = 0.
    for (int s = 1; s <= s_max; ++s) {
        poly acc;
        for (int r = 0; r <= p; ++r) {
            poly part = e_factorial(r, a, p) * h_factorial(s - r, a.shift(1 - s), p);
            if (r % 2) acc -= part;
            else acc += part;
        }
        check_equal(rep, "alternating e*h sum", "s=" + std::to_string(s), acc, poly::zero());
    }

    // Oversized h-determinant vanishes beyond p rows.
    for (int k = p + 1; k <= s_max; ++k) {
        std::vector<std::vector<poly>> mat(k, std::vector<poly>(k));
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) mat[i - 1][j - 1] = h_factorial(1 + j - i, a.shift(1 - j), p);
        check_equal(rep, "oversized h-determinant", "k=" + std::to_string(k), determinant(mat),
                    poly::zero());
    }
    return rep;
}

check_report run_schur_agreement(int p_max, int rows, int cols, int window_lo, int window_hi) {
    check_report rep;
    const parameter_sequence a = parameter_sequence::generic(window_lo, window_hi);
    for (int p = 1; p <= p_max; ++p) {
        for (const partition& lam : enumerate_weight_at_most(std::min(rows, p), rows * cols)) {
            if (lam.part(1) > cols) continue;
            const std::string inst = "p=" + std::to_string(p) + " lam=" + lam.str();
            poly ref = schur_ratio(lam, a, p);
            check_equal(rep, "schur h-determinant vs ratio", inst, schur_jt_h(lam, a, p), ref);
            check_equal(rep, "schur e-determinant vs ratio", inst,
                        schur_jt_e(lam, a, p, std::max(1, lam.part(1))), ref);
            check_equal(rep, "schur e-determinant size stability", inst,
                        schur_jt_e(lam, a, p, lam.part(1) + 2), ref);
        }
    }
    return rep;
}

check_report run_vanishing_table(int p, int cols) {
    check_report rep;
    const parameter_sequence a = parameter_sequence::generic(1, p + cols);
    const grassmann_shape shape(p, p + cols);
    schur_context ctx(a, p);
    for (const partition& lam : enumerate_rectangle(shape))
        for (const partition& rho : enumerate_rectangle(shape)) {
            const std::string inst = "lam=" + lam.str() + " rho=" + rho.str();
            const poly val = eval_at_partition(ctx.ratio(lam), rho, a, p);
            if (!rho.contains(lam)) {
                rep.add("vanishing off the order ideal", inst, val.is_zero(),
                        val.is_zero() ? "" : "value " + short_str(val));
            } else if (lam == rho) {
                check_equal(rep, "diagonal closed form", inst, val, diagonal_value(lam, a, p));
            }
        }
    return rep;
}

} // namespace eqschub
