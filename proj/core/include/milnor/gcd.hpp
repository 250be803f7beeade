#pragma once

#include <optional>

#include "milnor/bipoly.hpp"

namespace milnor {

// Scale so the graded-lexicographic leading coefficient is 1. Zero maps to zero.
BiPoly normalized_grlex_monic(const BiPoly& p);

// Quotient p/d when the division is exact, nothing otherwise. d must be nonzero.
std::optional<BiPoly> divided_exact(const BiPoly& p, const BiPoly& d);

bool divides_exactly(const BiPoly& d, const BiPoly& p);

// Greatest common divisor in Q[x,y]: content/primitive-part split over Q[x]
// with a subresultant polynomial-remainder sequence in y. The result is
// primitive and normalized grlex-monic, and divides both inputs exactly.
// Throws if both inputs are zero.
BiPoly gcd_bivariate(const BiPoly& p, const BiPoly& q);

// Product of the distinct linear factors (over C) of a nonzero binary form,
// computed as F / gcd(F, dF/dx, dF/dy) and normalized grlex-monic. Its degree
// is the number of distinct tangent lines of any curve with tangent cone F.
BinaryForm squarefree_part_binary(const BinaryForm& F);

}  // namespace milnor
