#pragma once

#include <gmpxx.h>

#include "eqschub/errors.hpp"

namespace eqschub {

using ZZ = mpz_class;
using QQ = mpq_class;

// Divisibility test, not a canonical-form test: 6/3 is integral.
inline bool is_integral(const QQ& r) {
    return mpz_divisible_p(r.get_num_mpz_t(), r.get_den_mpz_t()) != 0;
}

// Checked narrowing; a failure here means an exactness guarantee was violated.
inline ZZ to_integer(const QQ& r) {
    if (!is_integral(r))
        throw internal_error("non-integral rational where an integer is required: " + r.get_str());
    ZZ z;
    mpz_divexact(z.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return z;
}

inline QQ to_rational(const ZZ& z) { return QQ(z); }

} // namespace eqschub
