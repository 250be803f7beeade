#pragma once

#include <cstdint>
#include <stdexcept>

#include "milnor/bipoly.hpp"
#include "milnor/factored_curve.hpp"
#include "milnor/rng.hpp"

namespace milnor {

// Extremal family attaining mu = (d-1)^2 - floor(d/2): the conics
// x + i*x^2 + y^2 for i = 1..floor(d/2), plus the line x when d is odd.
// Requires d >= 2.
FactoredCurve gen_extremal(int d);

// Irreducible family attaining mu = (d-1)(d-2): x^(d-1) + y^d. Requires d >= 2.
BiPoly gen_irreducible_max(int d);

struct FuzzConfig {
    std::uint64_t seed = 0;
    int trials = 0;
    int max_factors = 4;
    int max_factor_degree = 3;
    int coeff_bound = 9;       // coefficients drawn from [-coeff_bound, coeff_bound]
    int oracle_subsample = 0;  // 0 = off; else cross-check every k-th trial
};

// Validates ranges; throws std::invalid_argument on a degenerate config
// (e.g. coeff_bound = 0, which cannot produce nonconstant factors).
void validate_config(const FuzzConfig& cfg);

// Draws 1..max_factors random integer-coefficient polynomials with zero
// constant term, each resampled until nonconstant; the list is resampled
// until it is pairwise coprime and the product has finite Milnor number.
// Deterministic in the rng state. Throws std::runtime_error when the
// resampling budget is exhausted (diagnostic, not a silent loop).
FactoredCurve random_factored_curve(SplitMix64& rng, const FuzzConfig& cfg);

// Seeded random singular one-tangent absolutely irreducible cubic through the
// origin: a GL2(Q) image of y^2*(1 - a*x) - x^3 (small integer a). Used by the
// contact-bound campaign, where the cubic's irreducibility must hold but
// cannot be machine-checked.
BiPoly random_one_tangent_cubic(SplitMix64& rng);

// Seeded random rank-certified irreducible conic vanishing at the origin.
BiPoly random_irreducible_conic(SplitMix64& rng, int coeff_bound = 9);

}  // namespace milnor
