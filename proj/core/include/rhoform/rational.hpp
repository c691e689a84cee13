#pragma once

#include <gmpxx.h>
#include <string>

namespace rhoform {

/// Exact rational number. GMP keeps values canonical (reduced, positive
/// denominator), which the Scalar layer relies on for representation equality.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r);

} // namespace rhoform
