#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "eqschub/errors.hpp"

namespace eqschub {

// Variable families, listed in the order they print inside a monomial.
//   T  equivariant parameters T1..Tm
//   q  the deformation variable (no index)
//   x  Schur variables x1..xp
//   h  complete-homogeneous generators h1..h_{m-p}
//   e  elementary generators e1..ep
//   a  shift-sequence symbols, indices may be negative (a-1, a0, a1, ...)
enum class family : std::uint8_t { T = 0, q = 1, x = 2, h = 3, e = 4, a = 5 };

struct variable {
    family fam = family::T;
    int idx = 0;

    friend constexpr auto operator<=>(const variable&, const variable&) = default;
};

inline variable T_(int i) { return {family::T, i}; }
inline variable q_() { return {family::q, 0}; }
inline variable x_(int i) { return {family::x, i}; }
inline variable h_(int i) { return {family::h, i}; }
inline variable e_(int i) { return {family::e, i}; }
inline variable a_(int i) { return {family::a, i}; }

inline std::string name(variable v) {
    static const char* prefix[] = {"T", "q", "x", "h", "e", "a"};
    std::string s = prefix[static_cast<int>(v.fam)];
    if (v.fam != family::q) s += std::to_string(v.idx);
    return s;
}

// Scan order used by the term order: generator families first, then x, q, T,
// and last the sequence symbols, which scan by descending index so that
// a2 - a1 renders in that order.  Lower key = scanned earlier.
inline std::pair<int, int> priority_key(variable v) {
    switch (v.fam) {
    case family::h: return {0, v.idx};
    case family::e: return {1, v.idx};
    case family::x: return {2, v.idx};
    case family::q: return {3, 0};
    case family::T: return {4, v.idx};
    case family::a: return {5, -v.idx};
    }
    throw internal_error("variable with unknown family");
}

// Weighted degrees: h_i and e_i carry their index, q carries the ambient m,
// every other variable counts 1.
struct grading {
    int q_grade = 0;

    int grade(variable v) const {
        switch (v.fam) {
        case family::h:
        case family::e: return v.idx;
        case family::q: return q_grade;
        default: return 1;
        }
    }
};

} // namespace eqschub
