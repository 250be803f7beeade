#pragma once

#include <stdexcept>

#include "milnor/bipoly.hpp"
#include "milnor/ext_nat.hpp"

namespace milnor::oracle {

// Independent brute-force route to local quotient dimensions by exact linear
// algebra. Deliberately does not depend on local_invariants; the two paths
// cross-validate each other.

struct TruncationLevel {
    int value = 1;
    explicit TruncationLevel(int n) : value(n) {
        if (n < 1) throw std::invalid_argument("TruncationLevel: N must be >= 1");
    }
};

// Raised when the truncation level would exceed the hard cap
// 4*(deg f * deg g) + 4 without the dimension stabilizing; a diagnostic,
// never a wrong answer. Unreachable for finite i0 (the cap exceeds the first
// stabilizing doubling pair), kept as a backstop.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Dimension over Q of {polynomials of total degree < N} modulo the span of
// the truncations of x^a y^b f and x^a y^b g with a+b+ord0(.) < N, by exact
// sparse row reduction. Requires f, g nonzero.
unsigned truncated_quotient_dimension(const BiPoly& f, const BiPoly& g,
                                      TruncationLevel level);

// Exact dim of the local ring modulo (f,g): infinity when gcd(f,g) vanishes
// at the origin, otherwise the stable value of the truncated dimension along
// the doubling sequence N = 4, 8, 16, ... Two agreeing consecutive levels
// certify exactness (the chain (f,g)+m^N is stationary from the first repeat
// on), so the returned value is never an under-approximation.
ExtNat local_quotient_dimension(const BiPoly& f, const BiPoly& g);

// local_quotient_dimension of the two partial derivatives.
// Throws on constant input.
ExtNat milnor_oracle(const BiPoly& f);

}  // namespace milnor::oracle
