#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <vector>

#include "eqschub/variable.hpp"

namespace eqschub {

// Sparse exponent vector.  Entries are kept sorted by scan priority and hold
// strictly positive exponents, so equality is structural.
class monomial {
public:
    using entry = std::pair<variable, int>;

    monomial() = default;

    monomial(std::initializer_list<entry> entries) {
        for (const auto& [v, k] : entries) *this = *this * of(v, k);
    }

    static monomial unit() { return {}; }

    static monomial of(variable v, int k = 1) {
        if (k < 0) throw internal_error("negative exponent in monomial");
        monomial m;
        if (k > 0) m.exps_.push_back({v, k});
        return m;
    }

    bool is_unit() const { return exps_.empty(); }
    const std::vector<entry>& exponents() const { return exps_; }

    int deg() const {
        int d = 0;
        for (const auto& [v, k] : exps_) d += k;
        return d;
    }

    int deg(variable v) const {
        for (const auto& [w, k] : exps_)
            if (w == v) return k;
        return 0;
    }

    int deg(family f) const {
        int d = 0;
        for (const auto& [v, k] : exps_)
            if (v.fam == f) d += k;
        return d;
    }

    int grade(const grading& g) const {
        int d = 0;
        for (const auto& [v, k] : exps_) d += g.grade(v) * k;
        return d;
    }

    monomial operator*(const monomial& o) const {
        monomial r;
        r.exps_.reserve(exps_.size() + o.exps_.size());
        auto i = exps_.begin(), j = o.exps_.begin();
        while (i != exps_.end() && j != o.exps_.end()) {
            auto ki = priority_key(i->first), kj = priority_key(j->first);
            if (ki < kj) r.exps_.push_back(*i++);
            else if (kj < ki) r.exps_.push_back(*j++);
            else {
                r.exps_.push_back({i->first, i->second + j->second});
                ++i, ++j;
            }
        }
        r.exps_.insert(r.exps_.end(), i, exps_.end());
        r.exps_.insert(r.exps_.end(), j, o.exps_.end());
        return r;
    }

    // Exact quotient *this / d, or nullopt when d does not divide.
    std::optional<monomial> divide(const monomial& d) const {
        monomial r;
        auto i = exps_.begin();
        for (const auto& [v, k] : d.exps_) {
            while (i != exps_.end() && priority_key(i->first) < priority_key(v)) r.exps_.push_back(*i++);
            if (i == exps_.end() || i->first != v || i->second < k) return std::nullopt;
            if (i->second > k) r.exps_.push_back({v, i->second - k});
            ++i;
        }
        r.exps_.insert(r.exps_.end(), i, exps_.end());
        return r;
    }

    bool divides(const monomial& o) const { return o.divide(*this).has_value(); }

    monomial pow(int k) const {
        if (k < 0) throw internal_error("negative power of a monomial");
        monomial r;
        r.exps_.reserve(exps_.size());
        if (k > 0)
            for (const auto& [v, e] : exps_) r.exps_.push_back({v, e * k});
        return r;
    }

    // The sub-monomial on one family, and the complement.
    monomial part(family f) const {
        monomial r;
        for (const auto& [v, k] : exps_)
            if (v.fam == f) r.exps_.push_back({v, k});
        return r;
    }

    monomial without(family f) const {
        monomial r;
        for (const auto& [v, k] : exps_)
            if (v.fam != f) r.exps_.push_back({v, k});
        return r;
    }

    friend bool operator==(const monomial&, const monomial&) = default;

private:
    std::vector<entry> exps_;
};

// Canonical term order: lexicographic along the scan order, so the monomial
// with the larger exponent on the earliest differing variable comes first.
// Returns >0 when a precedes b, <0 when b precedes a, 0 on equality.
inline int cmp(const monomial& a, const monomial& b) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    auto i = ea.begin();
    auto j = eb.begin();
    while (i != ea.end() && j != eb.end()) {
        auto ki = priority_key(i->first), kj = priority_key(j->first);
        if (ki < kj) return 1;  // a has a positive exponent where b has none
        if (kj < ki) return -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    if (i != ea.end()) return 1;
    if (j != eb.end()) return -1;
    return 0;
}

// Map comparator placing the canonically-first term at begin().
struct term_order {
    bool operator()(const monomial& a, const monomial& b) const { return cmp(a, b) > 0; }
};

} // namespace eqschub
