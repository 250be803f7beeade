#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace milnor {

// Exact scalar arithmetic. GMP's mpq_class keeps values canonical
// (positive denominator, coprime numerator/denominator, 0 stored as 0/1),
// which is exactly the invariant the rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace milnor
