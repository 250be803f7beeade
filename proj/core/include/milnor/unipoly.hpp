#pragma once

#include <vector>

#include "milnor/rational.hpp"

namespace milnor {

// Dense univariate polynomial over the rationals, coefficient index = exponent.
// Used for restrictions f(x,0) / f(0,y) and as the coefficient ring Q[x] of the
// bivariate gcd machinery. Leading coefficient is nonzero unless the
// polynomial is zero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Smallest exponent with nonzero coefficient; -1 for the zero polynomial.
    int order() const;

    Rational coeff(int exponent) const;
    const Rational& lead() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    UniPoly scaled(const Rational& c) const;
    UniPoly shifted(int exponent) const;  // multiply by t^exponent
    UniPoly monic() const;

    // Euclidean division over the field Q; divisor must be nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& quotient,
                       UniPoly& remainder);
    // Quotient when the division is exact, nothing otherwise.
    bool divided_exact(const UniPoly& d, UniPoly& quotient) const;

    // Monic gcd; gcd(0,0) = 0.
    static UniPoly gcd(UniPoly a, UniPoly b);

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace milnor
