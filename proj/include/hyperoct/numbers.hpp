#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "hyperoct/errors.hpp"

namespace hyperoct {

// Exact arbitrary-precision scalars. Multiplicities and dimensions grow
// combinatorially, so silent machine-word overflow is never acceptable.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(int n) {
    if (n < 0) throw InvalidArgument("factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (n < 0 || k < 0) throw InvalidArgument("binomial with negative argument");
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Checked narrowing for serialization boundaries.
inline std::int64_t to_int64(const Int& v) {
    if (!v.fits_slong_p()) throw Overflow("integer too large for int64 output");
    return static_cast<std::int64_t>(v.get_si());
}

}  // namespace hyperoct
