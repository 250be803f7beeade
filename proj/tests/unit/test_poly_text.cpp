#include <doctest.h>

#include "milnor/poly_text.hpp"
#include "milnor/rng.hpp"

using namespace milnor;

namespace {

BiPoly random_poly(SplitMix64& rng, int max_degree, int coeff_bound) {
    BiPoly f;
    int deg = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_degree) + 1));
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) {
            long num = rng.next_in(-coeff_bound, coeff_bound);
            long den = rng.next_in(1, 4);
            if (num != 0) f.add_term({i, j}, make_rational(num, den));
        }
    return f;
}

}  // namespace

TEST_SUITE("poly_text") {

TEST_CASE("term collection") {
    BiPoly p = parse_poly("x^2*y - 3/2*y^5 + x");
    CHECK(p.coeff({2, 1}) == 1);
    CHECK(p.coeff({0, 5}) == make_rational(-3, 2));
    CHECK(p.coeff({1, 0}) == 1);
    CHECK(p.term_count() == 3);
}

TEST_CASE("like terms merge") {
    CHECK(parse_poly("x + x") == parse_poly("2*x"));
}

TEST_CASE("parenthesized product") {
    BiPoly p = parse_poly("x*(y^3 - x^2)");
    CHECK(p.coeff({1, 3}) == 1);
    CHECK(p.coeff({3, 0}) == -1);
    CHECK(p.term_count() == 2);
}

TEST_CASE("whitespace insignificant") {
    CHECK(parse_poly(" x ^ 2 * y+ 1 ") == parse_poly("x^2*y+1"));
}

TEST_CASE("rational literals") {
    CHECK(parse_poly("-3/2") == BiPoly::constant(make_rational(-3, 2)));
    CHECK(parse_poly("x * -3") == parse_poly("-3*x"));
    CHECK(parse_poly("x--3") == parse_poly("x+3"));
    CHECK(parse_poly("007") == BiPoly::constant(7));
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_poly("2x"), ParseError);
    try {
        parse_poly("2x");
    } catch (const ParseError& e) {
        CHECK(e.position() == 1);  // implicit multiplication rejected at 'x'
    }
    try {
        parse_poly("x + z");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly("x +"), ParseError);
    CHECK_THROWS_AS(parse_poly("(x"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("-x"), ParseError);  // no unary minus on variables
}

TEST_CASE("exponent errors") {
    CHECK_THROWS_AS(parse_poly("x^-2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^y"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^(2)"), ParseError);
    CHECK(parse_poly("x^0") == parse_poly("1"));
}

TEST_CASE("denominator must be positive") {
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("3/-2"), ParseError);
}

TEST_CASE("format examples") {
    CHECK(format_poly(parse_poly("x*(y^3-x^2)")) == "x*y^3 - x^3");
    CHECK(format_poly(parse_poly("0")) == "0");
    CHECK(format_poly(parse_poly("-1*x^3")) == "-1*x^3");
    CHECK(format_poly(parse_poly("x + x^2 + y^2")) == "x^2 + y^2 + x");
    CHECK(format_poly(parse_poly("-3/2*y^5 + x^2*y + x")) == "-3/2*y^5 + x^2*y + x");
    CHECK(format_poly(BiPoly::constant(make_rational(-5))) == "-5");
}

TEST_CASE("parse after format is the identity") {
    SplitMix64 rng(31337);
    for (int k = 0; k < 80; ++k) {
        BiPoly p = random_poly(rng, 5, 9);
        CHECK(parse_poly(format_poly(p)) == p);
    }
}

}
