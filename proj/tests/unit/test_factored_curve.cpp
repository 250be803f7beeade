#include <doctest.h>

#include "milnor/factored_curve.hpp"
#include "milnor/poly_text.hpp"

using namespace milnor;

namespace {
BiPoly P(const char* s) { return parse_poly(s); }
}

TEST_SUITE("factored_curve") {

TEST_CASE("construction caches counts and degrees") {
    FactoredCurve c = FactoredCurve::make({P("x"), P("x+x^2+y^2"), P("x+2*x^2+y^2")});
    CHECK(c.count() == 3);
    CHECK(c.total_degree() == 5);
    CHECK(c.factor_degree(0) == 1);
    CHECK(c.factor_degree(1) == 2);
    CHECK(c.product() == P("x*(x+x^2+y^2)*(x+2*x^2+y^2)"));
}

TEST_CASE("rejects invalid factors") {
    CHECK_THROWS_AS(FactoredCurve::make({}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredCurve::make({P("3")}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredCurve::make({BiPoly()}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredCurve::make({P("x+1")}), std::invalid_argument);
}

TEST_CASE("rejects shared components and repeats") {
    CHECK_THROWS_AS(FactoredCurve::make({P("x"), P("x")}), std::domain_error);
    CHECK_THROWS_AS(FactoredCurve::make({P("x*y"), P("x")}), std::domain_error);
    CHECK_THROWS_AS(FactoredCurve::make({P("x^2-y^2"), P("x-y")}), std::domain_error);
    CHECK_NOTHROW(FactoredCurve::make({P("x*y"), P("x+y+x^2")}));
}

TEST_CASE("splitter drops units at the origin") {
    auto kept = strip_units_at_origin({P("x+1"), P("x"), P("y+3"), P("y-x^2")});
    REQUIRE(kept.size() == 2);
    CHECK(kept[0] == P("x"));
    CHECK(kept[1] == P("y-x^2"));
}

}
