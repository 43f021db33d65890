#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "eqschub/errors.hpp"
#include "eqschub/variable.hpp"

namespace eqschub {

// Integer partition: weakly decreasing positive parts.  Ordered by weight
// first, then lexicographically with the larger first part ahead, which is
// the enumeration and serialization order used throughout.
class partition {
public:
    partition() = default;

    partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

    explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw usage_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw usage_error("partition parts must be weakly decreasing");
        }
    }

    // Text form: comma-separated parts; "0" or "" denote the empty partition.
    static partition parse(const std::string& text);
    std::string str() const;     // "4,2,1", "0"
    std::string bracket() const; // "[4,2,1]", "[]"

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    // 1-based part access; zero beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    bool contains(const partition& inner) const {
        for (int i = 1; i <= inner.length(); ++i)
            if (part(i) < inner.part(i)) return false;
        return true;
    }

    bool fits(int rows, int cols) const {
        return length() <= rows && part(1) <= cols;
    }

    partition conjugate() const;

    friend bool operator==(const partition&, const partition&) = default;

    friend bool operator<(const partition& a, const partition& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.parts_ > b.parts_;
    }

private:
    std::vector<int> parts_;
};

// The Grassmannian shape: p rows, m - p columns.
struct grassmann_shape {
    int p = 1;
    int m = 2;

    grassmann_shape(int p_, int m_) : p(p_), m(m_) {
        if (p < 1 || m <= p) throw usage_error("shape requires 1 <= p < m");
    }

    int cols() const { return m - p; }
    grading grade() const { return {m}; }
    bool holds(const partition& lam) const { return lam.fits(p, cols()); }
    std::string str() const { return "Gr(" + std::to_string(p) + "," + std::to_string(m) + ")"; }

    friend bool operator==(const grassmann_shape&, const grassmann_shape&) = default;
};

// All partitions obtained from lam by adding one box, with at most max_rows
// rows and parts at most max_cols.
std::vector<partition> add_one_box(const partition& lam, int max_rows, int max_cols);

// Removes a full rim hook of m-1 boxes from the border: defined exactly when
// the first part is m-p and there are p nonzero parts; the result is
// (lam_2 - 1, ..., lam_p - 1).
std::optional<partition> rim_minus(const partition& lam, const grassmann_shape& shape);

// Replaces a maximal first part m-p by m-p+1, leaving the rest alone.
partition bar_extend(const partition& lam, const grassmann_shape& shape);

// All partitions inside the p x (m-p) rectangle, in canonical order.
std::vector<partition> enumerate_rectangle(const grassmann_shape& shape);

// All partitions with at most max_rows rows and weight at most max_weight,
// in canonical order.
std::vector<partition> enumerate_weight_at_most(int max_rows, int max_weight);

} // namespace eqschub
