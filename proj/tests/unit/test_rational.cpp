#include <doctest.h>

#include "milnor/rational.hpp"

using namespace milnor;

TEST_SUITE("rational") {

TEST_CASE("canonical form invariants") {
    Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);  // denominator positive, gcd 1

    Rational z = make_rational(0, 17);
    CHECK(z.get_num() == 0);
    CHECK(z.get_den() == 1);  // zero is 0/1

    Rational big = make_rational(Integer("123456789012345678901234567890"),
                                 Integer("9876543210"));
    CHECK(big.get_den() > 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), big.get_num().get_mpz_t(), big.get_den().get_mpz_t());
    CHECK(g == 1);
}

TEST_CASE("zero denominator rejected") {
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    Rational a = make_rational(1, 3);
    Rational b = make_rational(1, 6);
    CHECK(a + b == make_rational(1, 2));
    CHECK(a - b == make_rational(1, 6));
    CHECK(a * b == make_rational(1, 18));
    CHECK(a / b == make_rational(2, 1));
    // repeated summation does not drift
    Rational s = 0;
    for (int i = 0; i < 3000; ++i) s += make_rational(1, 3000);
    CHECK(s == 1);
}

TEST_CASE("to_string") {
    CHECK(to_string(make_rational(-3, 2)) == "-3/2");
    CHECK(to_string(make_rational(5)) == "5");
    CHECK(to_string(make_rational(0)) == "0");
}

}
