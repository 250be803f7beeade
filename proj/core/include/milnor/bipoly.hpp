#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "milnor/ext_nat.hpp"
#include "milnor/rational.hpp"
#include "milnor/unipoly.hpp"

namespace milnor {

class UniPoly;

struct Monomial {
    int x = 0;
    int y = 0;
    int total() const { return x + y; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded-lexicographic order with x ranked above y: compare total degree
// first, then the x-exponent. The library-wide normalization order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.x < b.x;
    }
};

enum class Var { X, Y };

// Sparse bivariate polynomial over the rationals. Stored coefficients are
// never zero; all operations return canonical values.
class BiPoly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    BiPoly() = default;  // zero polynomial

    static BiPoly constant(const Rational& c);
    static BiPoly term(Monomial m, const Rational& c);
    static BiPoly variable(Var v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Total degree; empty for the zero polynomial (degree undefined).
    std::optional<int> total_degree() const;
    // Smallest total degree of a term; infinity for the zero polynomial.
    ExtNat order_at_origin() const;

    Rational constant_term() const;  // value at the origin
    bool vanishes_at_origin() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(Monomial m) const;
    Monomial leading_monomial() const;  // grlex-largest; requires nonzero
    Rational leading_coeff() const;

    // Adds c*x^m.x*y^m.y, dropping the term if the sum cancels.
    void add_term(Monomial m, const Rational& c);

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator+=(const BiPoly& other);
    BiPoly& operator-=(const BiPoly& other);
    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.terms_ == b.terms_;
    }

    BiPoly scaled(const Rational& c) const;
    BiPoly pow(int exponent) const;  // exponent >= 0

    // The positive-rational multiple of this polynomial whose coefficients
    // are coprime integers. Keeps iterated eliminations from ballooning.
    BiPoly integer_primitive_scaled() const;
    void make_integer_primitive();  // in-place variant

    // this -= c * x^(shift.x) * y^(shift.y) * a, in one pass.
    void sub_scaled_shifted(const BiPoly& a, Monomial shift, const Rational& c);

    // Drop all terms of total degree >= level.
    void truncate_below(int level);

    BiPoly derivative(Var v) const;

    // Sum of the terms of minimal total degree; requires nonzero.
    BiPoly lowest_form_poly() const;

    // f(a*x + b*y, c*x + d*y).
    BiPoly substitute_linear(const Rational& a, const Rational& b,
                             const Rational& c, const Rational& d) const;

    UniPoly restrict_y_zero() const;  // f(x, 0) as a polynomial in x
    UniPoly restrict_x_zero() const;  // f(0, y) as a polynomial in y

    int degree_in_x() const;  // -1 for zero
    int degree_in_y() const;

    BiPoly divided_by_y() const;  // requires y | f
    BiPoly divided_by_x() const;

  private:
    TermMap terms_;
};

inline BiPoly operator*(const Rational& c, const BiPoly& p) { return p.scaled(c); }

// Nonzero homogeneous polynomial together with its degree; the carrier of
// tangent cones.
struct BinaryForm {
    BiPoly form;
    int degree = 0;

    // Validates homogeneity and nonzeroness.
    static BinaryForm of(const BiPoly& p);
};

// Tangent cone extraction: the homogeneous part of lowest total degree.
// Throws on the zero polynomial.
BinaryForm lowest_form(const BiPoly& p);

}  // namespace milnor
