#include <doctest.h>

#include "milnor/gcd.hpp"
#include "milnor/local_invariants.hpp"
#include "milnor/poly_text.hpp"
#include "milnor/rng.hpp"

using namespace milnor;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

BiPoly random_vanishing(SplitMix64& rng, int max_degree, int coeff_bound) {
    for (;;) {
        BiPoly f;
        int deg = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_degree))) + 1;
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j) {
                if (i + j == 0) continue;
                long c = rng.next_in(-coeff_bound, coeff_bound);
                if (c != 0) f.add_term({i, j}, c);
            }
        if (!f.is_zero()) return f;
    }
}

}  // namespace

TEST_SUITE("local_invariants") {

TEST_CASE("intersection multiplicity pinned values") {
    CHECK(intersection_multiplicity(P("x"), P("y")) == ExtNat::of(1));
    CHECK(intersection_multiplicity(P("x+x^2+y^2"), P("x+2*x^2+y^2")) == ExtNat::of(4));
    CHECK(intersection_multiplicity(P("x*y"), P("x")).is_infinite());
    CHECK(intersection_multiplicity(P("y-x^2"), P("y")) == ExtNat::of(2));
    // does not vanish at the origin -> 0
    CHECK(intersection_multiplicity(P("x+1"), P("y")) == ExtNat::of(0));
    CHECK_THROWS_AS(intersection_multiplicity(BiPoly(), P("x")), std::invalid_argument);
}

TEST_CASE("shared component away from the origin stays finite") {
    BiPoly f = P("(x+1)*x");
    BiPoly g = P("(x+1)*y");
    CHECK(intersection_multiplicity(f, g) == ExtNat::of(1));
}

TEST_CASE("milnor pinned values") {
    CHECK(milnor_number(P("x*(y^3-x^2)")) == ExtNat::of(7));
    CHECK(milnor_number(P("x^3+y^3")) == ExtNat::of(4));
    CHECK(milnor_number(P("y^2-x^3")) == ExtNat::of(2));
    CHECK(milnor_number(P("x^2*y^2")).is_infinite());
    CHECK(milnor_number(P("x")) == ExtNat::of(0));
    CHECK(milnor_number(P("y^3")).is_infinite());   // zero x-partial, vanishing y-partial
    CHECK(milnor_number(P("3*y")) == ExtNat::of(0));
    CHECK_THROWS_AS(milnor_number(P("5")), std::invalid_argument);
}

TEST_CASE("tangent data") {
    TangentData a = tangent_data(P("x*(y^3-x^2)"));
    CHECK(a.cone.form == P("-1*x^3"));
    CHECK(a.cone.degree == 3);
    CHECK(a.distinct_count == 1);
    CHECK(a.order == 3);

    TangentData b = tangent_data(P("x*y"));
    CHECK(b.distinct_count == 2);
    CHECK(b.order == 2);

    TangentData c = tangent_data(P("x^2+y^2"));
    CHECK(c.distinct_count == 2);  // tangents at +-i
    CHECK(c.order == 2);

    CHECK_THROWS_AS(tangent_data(P("x+1")), std::invalid_argument);
}

TEST_CASE("common tangents and transversality") {
    CHECK(shares_common_tangent(P("x+x^2+y^2"), P("x+2*x^2+y^2")));
    CHECK(!shares_common_tangent(P("x+x^2"), P("y+y^2")));
    CHECK(!shares_common_tangent(P("x^2+y^2"), P("x+y^3")));

    CHECK(is_transverse(P("x"), P("y")));
    CHECK(!is_transverse(P("x"), P("x+y^2")));
    CHECK(is_transverse(P("y-x^2"), P("x")));
    CHECK(intersection_multiplicity(P("y-x^2"), P("x")) == ExtNat::of(1));

    CHECK_THROWS_AS(shares_common_tangent(P("x+1"), P("y")), std::invalid_argument);
}

TEST_CASE("tangent line predicate") {
    CHECK(is_tangent_line(P("x+x^2+y^2"), P("x")));
    CHECK(!is_tangent_line(P("x+x^2+y^2"), P("y")));
    // a component line counts as tangent (i0 infinite)
    CHECK(is_tangent_line(P("x*(y^3-x^2)"), P("x")));
    CHECK_THROWS_AS(is_tangent_line(P("x+y^2"), P("x+1")), std::invalid_argument);
    CHECK_THROWS_AS(is_tangent_line(P("x+y^2"), P("x^2")), std::invalid_argument);
}

TEST_CASE("symmetry on random pairs") {
    SplitMix64 rng(555);
    for (int k = 0; k < 40; ++k) {
        BiPoly f = random_vanishing(rng, 3, 4);
        BiPoly g = random_vanishing(rng, 3, 4);
        CHECK(intersection_multiplicity(f, g) == intersection_multiplicity(g, f));
    }
}

TEST_CASE("additivity in the second argument") {
    SplitMix64 rng(556);
    int tested = 0;
    for (int k = 0; k < 80 && tested < 30; ++k) {
        BiPoly f = random_vanishing(rng, 3, 4);
        BiPoly g = random_vanishing(rng, 2, 4);
        BiPoly h = random_vanishing(rng, 2, 4);
        ExtNat a = intersection_multiplicity(f, g * h);
        ExtNat b = intersection_multiplicity(f, g);
        ExtNat c = intersection_multiplicity(f, h);
        if (a.is_infinite() || b.is_infinite() || c.is_infinite()) continue;
        ++tested;
        CHECK(a == b + c);
    }
    CHECK(tested >= 10);
}

TEST_CASE("invariance under adding a multiple") {
    SplitMix64 rng(557);
    int tested = 0;
    for (int k = 0; k < 80 && tested < 30; ++k) {
        BiPoly f = random_vanishing(rng, 3, 4);
        BiPoly g = random_vanishing(rng, 3, 4);
        BiPoly h = random_vanishing(rng, 2, 3);
        ExtNat before = intersection_multiplicity(f, g);
        ExtNat after = intersection_multiplicity(f, g + h * f);
        if ((g + h * f).is_zero()) continue;
        ++tested;
        CHECK(before == after);
    }
    CHECK(tested >= 10);
}

TEST_CASE("lower bound by the product of orders, equality iff transverse") {
    SplitMix64 rng(558);
    int tested = 0;
    for (int k = 0; k < 100 && tested < 40; ++k) {
        BiPoly f = random_vanishing(rng, 3, 4);
        BiPoly g = random_vanishing(rng, 3, 4);
        ExtNat i0 = intersection_multiplicity(f, g);
        if (i0.is_infinite()) continue;
        ++tested;
        std::uint64_t of = f.order_at_origin().value();
        std::uint64_t og = g.order_at_origin().value();
        CHECK(i0.value() >= of * og);
        CHECK((i0.value() == of * og) == is_transverse(f, g));
    }
    CHECK(tested >= 20);
}

TEST_CASE("product formula for the milnor number of a pair") {
    // mu(fg) + 1 = mu(f) + mu(g) + 2*i0(f,g) for coprime f, g through 0
    SplitMix64 rng(559);
    int tested = 0;
    for (int k = 0; k < 100 && tested < 30; ++k) {
        BiPoly f = random_vanishing(rng, 3, 4);
        BiPoly g = random_vanishing(rng, 3, 4);
        if (!gcd_bivariate(f, g).is_constant()) continue;
        ExtNat mfg = milnor_number(f * g);
        if (mfg.is_infinite()) continue;
        ExtNat mf = milnor_number(f);
        ExtNat mg = milnor_number(g);
        ExtNat i0 = intersection_multiplicity(f, g);
        REQUIRE(mf.is_finite());
        REQUIRE(mg.is_finite());
        REQUIRE(i0.is_finite());
        ++tested;
        CHECK(mfg.value() + 1 == mf.value() + mg.value() + 2 * i0.value());
    }
    CHECK(tested >= 10);
}

TEST_CASE("coordinate invariance on a fixed set") {
    SplitMix64 rng(560);
    std::vector<BiPoly> curves = {P("x*(y^3-x^2)"), P("x^3+y^4"), P("y^2-x^3"),
                                  P("x^2+y^2"), P("x^3+y^3")};
    for (int k = 0; k < 10; ++k) {
        long a, b, c, d;
        do {
            a = rng.next_in(-3, 3);
            b = rng.next_in(-3, 3);
            c = rng.next_in(-3, 3);
            d = rng.next_in(-3, 3);
        } while (a * d - b * c == 0);
        for (const auto& f : curves) {
            BiPoly tf = f.substitute_linear(a, b, c, d);
            CHECK(milnor_number(tf) == milnor_number(f));
            CHECK(tf.order_at_origin() == f.order_at_origin());
            CHECK(tangent_data(tf).distinct_count == tangent_data(f).distinct_count);
        }
        CHECK(intersection_multiplicity(P("x").substitute_linear(a, b, c, d),
                                        P("y").substitute_linear(a, b, c, d)) ==
              ExtNat::of(1));
    }
}

}
