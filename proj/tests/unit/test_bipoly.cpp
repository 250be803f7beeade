#include <doctest.h>

#include "milnor/bipoly.hpp"
#include "milnor/poly_text.hpp"
#include "milnor/rng.hpp"

using namespace milnor;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

BiPoly random_poly(SplitMix64& rng, int max_degree, int coeff_bound,
                   bool zero_constant = false) {
    BiPoly f;
    int deg = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_degree) + 1));
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) {
            if (zero_constant && i + j == 0) continue;
            long c = rng.next_in(-coeff_bound, coeff_bound);
            if (c != 0) f.add_term({i, j}, c);
        }
    return f;
}

}  // namespace

TEST_SUITE("bipoly") {

TEST_CASE("construction and canonicity") {
    BiPoly p = P("x + x");
    CHECK(p == P("2*x"));
    CHECK(p.term_count() == 1);

    BiPoly cancel = P("x^2") - P("x^2");
    CHECK(cancel.is_zero());
    CHECK(!cancel.total_degree().has_value());
    CHECK(cancel.order_at_origin().is_infinite());
}

TEST_CASE("degree and order basics") {
    CHECK(*P("x^2*y - 3/2*y^5 + x").total_degree() == 5);
    CHECK(P("x^2+y^3").order_at_origin() == ExtNat::of(2));
    CHECK(P("5").order_at_origin() == ExtNat::of(0));
    CHECK(P("x+x^2+y^2").order_at_origin() == ExtNat::of(1));
}

TEST_CASE("ring axioms on random triples") {
    SplitMix64 rng(2024);
    for (int k = 0; k < 60; ++k) {
        BiPoly a = random_poly(rng, 4, 5);
        BiPoly b = random_poly(rng, 4, 5);
        BiPoly c = random_poly(rng, 4, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("degree is additive under multiplication") {
    SplitMix64 rng(99);
    for (int k = 0; k < 40; ++k) {
        BiPoly a = random_poly(rng, 3, 6);
        BiPoly b = random_poly(rng, 3, 6);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(*(a * b).total_degree() == *a.total_degree() + *b.total_degree());
    }
}

TEST_CASE("pow and scale") {
    CHECK(P("x+1").pow(2) == P("x^2 + 2*x + 1"));
    CHECK(P("x+y").pow(0) == P("1"));
    CHECK(P("x^2+y").scaled(make_rational(3, 2)) == P("3/2*x^2 + 3/2*y"));
}

TEST_CASE("derivative basics and Leibniz rule") {
    CHECK(P("x^2*y").derivative(Var::X) == P("2*x*y"));
    CHECK(P("x^3").derivative(Var::Y).is_zero());
    CHECK(P("x^3+y^4").derivative(Var::X) == P("3*x^2"));

    SplitMix64 rng(7);
    for (int k = 0; k < 40; ++k) {
        BiPoly f = random_poly(rng, 3, 4);
        BiPoly g = random_poly(rng, 3, 4);
        for (Var v : {Var::X, Var::Y}) {
            CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
        }
    }
}

TEST_CASE("lowest form examples") {
    BinaryForm a = lowest_form(P("x^2+y^3"));
    CHECK(a.degree == 2);
    CHECK(a.form == P("x^2"));

    BinaryForm b = lowest_form(P("x*(y^3-x^2)"));
    CHECK(b.degree == 3);
    CHECK(b.form == P("-1*x^3"));

    BinaryForm c = lowest_form(P("x*y"));
    CHECK(c.degree == 2);
    CHECK(c.form == P("x*y"));

    CHECK_THROWS_AS(lowest_form(BiPoly()), std::invalid_argument);
}

TEST_CASE("order and lowest form are multiplicative") {
    SplitMix64 rng(11);
    for (int k = 0; k < 40; ++k) {
        BiPoly a = random_poly(rng, 3, 4);
        BiPoly b = random_poly(rng, 3, 4);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).order_at_origin() == a.order_at_origin() + b.order_at_origin());
        CHECK(lowest_form(a * b).form == lowest_form(a).form * lowest_form(b).form);
    }
}

TEST_CASE("binary form validation") {
    CHECK_THROWS_AS(BinaryForm::of(P("x^2+y")), std::invalid_argument);
    CHECK_THROWS_AS(BinaryForm::of(BiPoly()), std::invalid_argument);
    CHECK(BinaryForm::of(P("x^2+x*y")).degree == 2);
}

TEST_CASE("restrictions to the axes") {
    BiPoly f = P("x^2*y + x^3 + y^2 + 2*x");
    UniPoly fx0 = f.restrict_y_zero();
    CHECK(fx0.degree() == 3);
    CHECK(fx0.coeff(1) == 2);
    CHECK(fx0.coeff(2) == 0);
    UniPoly f0y = f.restrict_x_zero();
    CHECK(f0y.degree() == 2);
    CHECK(f0y.order() == 2);
    CHECK(P("x*y").restrict_y_zero().is_zero());
}

TEST_CASE("linear substitution") {
    // f(x,y) = x^2 under x -> x+y: (x+y)^2
    BiPoly f = P("x^2").substitute_linear(1, 1, 0, 1);
    CHECK(f == P("x^2 + 2*x*y + y^2"));
    // substitution is multiplicative
    SplitMix64 rng(5);
    for (int k = 0; k < 25; ++k) {
        BiPoly a = random_poly(rng, 3, 3);
        BiPoly b = random_poly(rng, 3, 3);
        CHECK((a * b).substitute_linear(2, 1, 1, 1) ==
              a.substitute_linear(2, 1, 1, 1) * b.substitute_linear(2, 1, 1, 1));
    }
}

TEST_CASE("division by a variable") {
    CHECK(P("x*y + y^2").divided_by_y() == P("x + y"));
    CHECK_THROWS_AS(P("x + y").divided_by_y(), std::logic_error);
}

}
