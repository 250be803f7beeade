#include <doctest.h>

#include "milnor/gcd.hpp"
#include "milnor/poly_text.hpp"
#include "milnor/rng.hpp"

using namespace milnor;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

BiPoly random_poly(SplitMix64& rng, int max_degree, int coeff_bound) {
    BiPoly f;
    int deg = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_degree))) + 1;
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) {
            long c = rng.next_in(-coeff_bound, coeff_bound);
            if (c != 0) f.add_term({i, j}, c);
        }
    return f;
}

}  // namespace

TEST_SUITE("gcd") {

TEST_CASE("pinned examples") {
    CHECK(gcd_bivariate(P("x^2-y^2"), P("x-y")) == P("x-y"));
    CHECK(gcd_bivariate(P("x"), P("y")) == P("1"));
    CHECK(gcd_bivariate(P("x*(y^3-x^2)"), P("x")) == P("x"));
}

TEST_CASE("zero and constant handling") {
    CHECK_THROWS_AS(gcd_bivariate(BiPoly(), BiPoly()), std::invalid_argument);
    CHECK(gcd_bivariate(P("2*x+2*y"), BiPoly()) == P("x+y"));
    CHECK(gcd_bivariate(BiPoly(), P("3*y^2")) == P("y^2"));
    CHECK(gcd_bivariate(P("7"), P("x^5+y")) == P("1"));
}

TEST_CASE("gcd divides both inputs exactly") {
    SplitMix64 rng(404);
    for (int k = 0; k < 50; ++k) {
        BiPoly a = random_poly(rng, 3, 5);
        BiPoly b = random_poly(rng, 3, 5);
        if (a.is_zero() || b.is_zero()) continue;
        BiPoly g = gcd_bivariate(a, b);
        CHECK(divides_exactly(g, a));
        CHECK(divides_exactly(g, b));
        // grlex-monic normalization
        CHECK(g.leading_coeff() == 1);
    }
}

TEST_CASE("common factor is recovered up to normalization") {
    SplitMix64 rng(808);
    int tested = 0;
    for (int k = 0; k < 60 && tested < 25; ++k) {
        BiPoly a = random_poly(rng, 2, 4);
        BiPoly b = random_poly(rng, 2, 4);
        BiPoly h = random_poly(rng, 2, 4);
        if (a.is_zero() || b.is_zero() || h.is_zero()) continue;
        if (!gcd_bivariate(a, b).is_constant()) continue;  // want coprime a, b
        ++tested;
        BiPoly g = gcd_bivariate(a * h, b * h);
        CHECK(g == normalized_grlex_monic(h));
    }
    CHECK(tested >= 10);
}

TEST_CASE("exact division") {
    auto q = divided_exact(P("x^2-y^2"), P("x+y"));
    REQUIRE(q.has_value());
    CHECK(*q == P("x-y"));
    CHECK(!divided_exact(P("x^2+y"), P("x+y")).has_value());
    CHECK(divides_exactly(P("x"), BiPoly()));
}

TEST_CASE("squarefree part of binary forms") {
    BinaryForm a = squarefree_part_binary(BinaryForm::of(P("x^2*y")));
    CHECK(a.degree == 2);
    CHECK(a.form == P("x*y"));

    BinaryForm b = squarefree_part_binary(BinaryForm::of(P("(x+y)^3")));
    CHECK(b.degree == 1);
    CHECK(b.form == P("x+y"));

    BinaryForm c = squarefree_part_binary(BinaryForm::of(P("x^2+y^2")));
    CHECK(c.degree == 2);
    CHECK(c.form == P("x^2+y^2"));  // two distinct complex tangents

    BinaryForm d = squarefree_part_binary(BinaryForm::of(P("y^4")));
    CHECK(d.degree == 1);
    CHECK(d.form == P("y"));
}

TEST_CASE("squarefree degree drop matches gcd with the x-partial") {
    SplitMix64 rng(1212);
    for (int k = 0; k < 40; ++k) {
        // random binary form from random linear factors
        BiPoly F = BiPoly::constant(1);
        int nfac = static_cast<int>(rng.next_below(3)) + 1;
        for (int i = 0; i < nfac; ++i) {
            long a = rng.next_in(-3, 3), b = rng.next_in(-3, 3);
            if (a == 0 && b == 0) a = 1;
            BiPoly line = BiPoly::term({1, 0}, a) + BiPoly::term({0, 1}, b);
            F = F * line.pow(static_cast<int>(rng.next_below(2)) + 1);
        }
        BinaryForm form = BinaryForm::of(F);
        BinaryForm sq = squarefree_part_binary(form);
        CHECK(sq.degree <= form.degree);
        bool equality = (sq.degree == form.degree);
        // equality iff F is squarefree, i.e. gcd(F, Fx, Fy) is constant.
        // (The single-partial variant is wrong: gcd(xy, d(xy)/dx) = y even
        // though xy is squarefree.)
        BiPoly g = gcd_bivariate(form.form, form.form.derivative(Var::X));
        g = gcd_bivariate(g, form.form.derivative(Var::Y));
        CHECK(equality == g.is_constant());
    }
}

}
