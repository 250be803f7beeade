#include "milnor/local_invariants.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "milnor/gcd.hpp"

namespace milnor {

namespace {

// Reduction loop for the finite case, run with all polynomials truncated to
// total degree < level. Truncation is sound a posteriori: along every local
// branch of a curve the valuation of b is unchanged by dropping terms of
// order >= level as long as that valuation stays below level, so a final
// total <= level-1 certifies the exact answer (returned); anything else
// returns nothing and the caller retries with a higher level. At the Bezout
// cap level = deg f * deg g + 1 every truncation preserves the ideal (f,g)
// outright, so the run is exact and the certificate always fires.
//
// Within one run: every y-split adds >= 1 and between splits the degree of
// the reduced restriction strictly decreases, so the loop terminates; the
// aborts catch the corruption symptoms a too-small level can produce
// (vanishing b, a shared factor y, an overflowing total).
std::optional<std::uint64_t> reduce_truncated(BiPoly a, BiPoly b, int level) {
    std::uint64_t total = 0;
    const std::uint64_t cap = static_cast<std::uint64_t>(level - 1);
    a.truncate_below(level);
    a.make_integer_primitive();
    b.truncate_below(level);
    b.make_integer_primitive();
    int since_rescale = 0;
    for (;;) {
        if (a.is_zero() || b.is_zero()) return std::nullopt;
        if (!a.vanishes_at_origin() || !b.vanishes_at_origin()) return total;

        UniPoly ra = a.restrict_y_zero();
        UniPoly rb = b.restrict_y_zero();

        if (ra.is_zero() && rb.is_zero()) return std::nullopt;  // shared factor y

        // Put the y-divisible polynomial first, mirroring the convention of
        // splitting the first argument.
        if (rb.is_zero()) {
            std::swap(a, b);
            std::swap(ra, rb);
        }
        if (ra.is_zero()) {
            // a = y*h and i0(y, b) = order of b(x,0) at x = 0.
            total += static_cast<std::uint64_t>(rb.order());
            if (total > cap) return std::nullopt;
            a = a.divided_by_y();
            continue;
        }

        // Both restrictions nonzero: cancel the leading coefficient of the
        // higher-degree restriction against the lower-degree one.
        if (ra.degree() > rb.degree()) {
            std::swap(a, b);
            std::swap(ra, rb);
        }
        int shift = rb.degree() - ra.degree();
        Rational c = rb.lead() / ra.lead();
        b.sub_scaled_shifted(a, {shift, 0}, c);
        b.truncate_below(level);
        if (++since_rescale >= 4) {  // amortize the content scan
            b.make_integer_primitive();
            since_rescale = 0;
        }
    }
}

std::uint64_t reduce_at_origin(const BiPoly& f, const BiPoly& g) {
    const long bezout = static_cast<long>(*f.total_degree()) * *g.total_degree() + 1;
    for (long level = 8;; level = std::min(level * 2, bezout)) {
        if (level > bezout) level = bezout;
        auto result = reduce_truncated(f, g, static_cast<int>(level));
        if (result && *result <= static_cast<std::uint64_t>(level - 1)) return *result;
        if (level >= bezout)
            throw std::logic_error(
                "intersection_multiplicity: no certificate at the Bezout cap");
    }
}

}  // namespace

ExtNat intersection_multiplicity(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("intersection_multiplicity: zero polynomial");
    if (!f.vanishes_at_origin() || !g.vanishes_at_origin()) return ExtNat::of(0);
    if (gcd_bivariate(f, g).vanishes_at_origin()) return ExtNat::infinity();
    return ExtNat::of(reduce_at_origin(f, g));
}

ExtNat milnor_number(const BiPoly& f) {
    if (f.is_constant())
        throw std::invalid_argument("milnor_number: constant polynomial");
    BiPoly fx = f.derivative(Var::X);
    BiPoly fy = f.derivative(Var::Y);
    // A vanishing partial leaves a principal ideal: dimension 0 exactly when
    // the other partial is a unit at the origin, infinite otherwise.
    if (fx.is_zero()) return fy.vanishes_at_origin() ? ExtNat::infinity() : ExtNat::of(0);
    if (fy.is_zero()) return fx.vanishes_at_origin() ? ExtNat::infinity() : ExtNat::of(0);
    return intersection_multiplicity(fx, fy);
}

TangentData tangent_data(const BiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("tangent_data: zero polynomial");
    if (!f.vanishes_at_origin())
        throw std::invalid_argument("tangent_data: curve does not pass through the origin");
    TangentData t{lowest_form(f), 0, 0};
    t.order = t.cone.degree;
    t.distinct_count = squarefree_part_binary(t.cone).degree;
    return t;
}

bool shares_common_tangent(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("shares_common_tangent: zero polynomial");
    if (!f.vanishes_at_origin() || !g.vanishes_at_origin())
        throw std::invalid_argument(
            "shares_common_tangent: curve does not pass through the origin");
    BiPoly common = gcd_bivariate(lowest_form(f).form, lowest_form(g).form);
    return !common.is_constant();
}

bool is_transverse(const BiPoly& f, const BiPoly& g) {
    return !shares_common_tangent(f, g);
}

bool is_tangent_line(const BiPoly& f, const BiPoly& l) {
    if (l.is_zero() || l.total_degree() != 1 || !l.vanishes_at_origin())
        throw std::invalid_argument(
            "is_tangent_line: expected a nonzero homogeneous linear form");
    if (f.is_zero() || !f.vanishes_at_origin())
        throw std::invalid_argument(
            "is_tangent_line: curve must be nonzero and pass through the origin");
    return intersection_multiplicity(f, l) > f.order_at_origin();
}

}  // namespace milnor
