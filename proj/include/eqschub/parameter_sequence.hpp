#pragma once

#include <map>
#include <memory>

#include "eqschub/partition.hpp"
#include "eqschub/polynomial.hpp"

namespace eqschub {

// A doubly-infinite coefficient sequence with finite support, together with
// its shifts: shift(r) maps the term at position i to the term at i + r.
// Generic sequences are "strict": reading outside the declared window is a
// caller bug (the window was sized too small) and throws, instead of
// silently returning zero the way deliberately-truncated sequences do.
class parameter_sequence {
public:
    parameter_sequence() : window_(std::make_shared<std::map<int, poly>>()) {}

    // Identically zero.
    static parameter_sequence zeros() { return {}; }

    // a_lo, ..., a_hi as independent symbols; zero is unreachable (strict).
    static parameter_sequence generic(int lo, int hi) {
        parameter_sequence s;
        auto w = std::make_shared<std::map<int, poly>>();
        for (int i = lo; i <= hi; ++i) (*w)[i] = poly::var(a_(i));
        s.window_ = std::move(w);
        s.strict_ = true;
        s.lo_ = lo;
        s.hi_ = hi;
        return s;
    }

    // The equivariant specialization for a shape: position i carries
    // T_{m-i+1} for 1 <= i <= m and zero elsewhere.
    static parameter_sequence equivariant(const grassmann_shape& shape) {
        parameter_sequence s;
        auto w = std::make_shared<std::map<int, poly>>();
        for (int i = 1; i <= shape.m; ++i) (*w)[i] = poly::var(T_(shape.m - i + 1));
        s.window_ = std::move(w);
        return s;
    }

    poly term(int i) const {
        const int j = i + offset_;
        if (strict_ && (j < lo_ || j > hi_))
            throw internal_error("sequence read outside its declared window: position " +
                                 std::to_string(j));
        auto it = window_->find(j);
        return it == window_->end() ? poly::zero() : it->second;
    }

    parameter_sequence shift(int r) const {
        parameter_sequence s(*this);
        s.offset_ += r;
        return s;
    }

    int offset() const { return offset_; }
    bool strict() const { return strict_; }

private:
    std::shared_ptr<const std::map<int, poly>> window_;
    int offset_ = 0;
    bool strict_ = false;
    int lo_ = 0, hi_ = -1;
};

inline parameter_sequence make_t(const grassmann_shape& shape) {
    return parameter_sequence::equivariant(shape);
}

} // namespace eqschub
