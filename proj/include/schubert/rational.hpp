#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schubert {

// Exact rational scalar used throughout the engine.  GMP keeps arithmetic
// results canonical as long as the operands are canonical.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace schubert
