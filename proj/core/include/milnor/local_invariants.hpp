#pragma once

#include "milnor/bipoly.hpp"
#include "milnor/ext_nat.hpp"

namespace milnor {

// Local intersection multiplicity i0(f,g) at the origin, computed by the
// Fulton-style reduction on the restrictions to the line y = 0:
//   - 0 when f or g does not vanish at the origin;
//   - infinity when gcd(f,g) vanishes at the origin (shared component);
//   - otherwise iterate: if a restriction to y=0 is identically zero, split
//     off the factor y (i0(y,g) = order of g(x,0) at x=0); otherwise cancel
//     the leading coefficient of the higher-degree restriction against the
//     lower one, which strictly decreases that degree.
// Pure rational arithmetic; agrees with the local quotient dimension.
// Throws std::invalid_argument on zero input.
ExtNat intersection_multiplicity(const BiPoly& f, const BiPoly& g);

// dim of the local ring modulo the two partial derivatives:
// i0(df/dx, df/dy). Infinity iff the singular locus through the origin is
// positive-dimensional. Throws on constant or zero input.
ExtNat milnor_number(const BiPoly& f);

// Tangent cone of f at the origin with the count of distinct tangent lines
// over C and the order of the curve.
struct TangentData {
    BinaryForm cone;
    int distinct_count = 0;
    int order = 0;
};

// Requires f nonzero with f(0,0) = 0.
TangentData tangent_data(const BiPoly& f);

// True iff the lowest forms of f and g have a nonconstant common factor.
// Requires both nonzero and vanishing at the origin.
bool shares_common_tangent(const BiPoly& f, const BiPoly& g);

// Negation of shares_common_tangent; when true and i0 is finite,
// i0(f,g) = ord0(f) * ord0(g).
bool is_transverse(const BiPoly& f, const BiPoly& g);

// A line l = 0 through the origin is tangent to f = 0 iff
// i0(f,l) > ord0(f). A component line (i0 = infinity) counts as tangent.
// Requires l a nonzero homogeneous linear form and f(0,0) = 0.
bool is_tangent_line(const BiPoly& f, const BiPoly& l);

}  // namespace milnor
