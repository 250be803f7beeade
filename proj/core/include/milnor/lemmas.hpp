#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/ext_nat.hpp"
#include "milnor/factored_curve.hpp"

namespace milnor {

// Absolute irreducibility evidence per factor. Degrees 1 and 2 are decided
// exactly (a conic is absolutely irreducible iff its symmetric 3x3
// coefficient matrix has rank 3, i.e. nonzero determinant); higher degrees
// are taken on trust.
enum class FactorIrreducibility {
    VerifiedLinear,
    VerifiedConic,
    Refuted,   // conic failing the rank certificate: known reducible
    Assumed,   // degree >= 3: not decidable here
};

std::string to_string(FactorIrreducibility s);

// Rank-3 certificate for a degree-2 polynomial.
bool conic_is_irreducible(const BiPoly& conic);

FactorIrreducibility classify_factor(const BiPoly& factor);

// Product identity for local Milnor numbers over a factor list vanishing at
// the origin: mu(f) + m - 1 = sum_i mu(f_i) + 2 * sum_{i<j} i0(f_i, f_j).
// Both sides are evaluated exactly; `holds` must come back true for valid
// inputs, so a false result is evidence of an implementation bug.
struct ProductIdentityResult {
    bool holds = false;
    ExtNat lhs;  // mu(product) + m - 1
    ExtNat rhs;  // sum of factor Milnor numbers + twice the pairwise i0 sum
    ExtNat mu_product;
    std::vector<ExtNat> mu_factors;
};

// Throws std::domain_error when any constituent invariant is infinite.
ProductIdentityResult check_lemma21_identity(const FactoredCurve& c);

// Clause-by-clause verdict for the extremal-curve characterization (condition
// (ii)): m = d - floor(d/2) components, degree multiset all 2 (d even) or all
// 2 plus one 1 (d odd), pairwise contact 4 between the conics, the linear
// factor tangent to every conic when d is odd, conics certified irreducible.
struct Thm14Result {
    int d = 0;
    bool i_holds = false;            // mu = (d-1)^2 - floor(d/2)
    bool ii_holds = false;
    bool equivalence_holds = false;  // i <-> ii
    bool d4_exception = false;       // d == 4: equivalence reported, not asserted
    // (ii) diagnostics
    bool component_count_ok = false;
    bool degree_multiset_ok = false;
    bool conics_irreducible_ok = false;
    bool pairwise_contact_ok = false;
    bool line_tangency_ok = false;
};

// Requires total degree d > 2 (throws std::invalid_argument otherwise) and an
// isolated singularity (throws std::domain_error when mu is infinite).
Thm14Result check_thm14(const FactoredCurve& c);

struct LemmaReport {
    ExtNat milnor;  // of the product
    int d = 0;
    int m = 0;

    bool lemma21_applicable = false;
    bool lemma21_identity_holds = false;

    long lemma24_lambda_count = 0;  // #{(i,j): i<j, transverse, d_i>1 or d_j>1}
    long lemma24_bound = 0;         // (d-1)^2 - d + m - 2*#Lambda
    bool lemma24_holds = false;

    long lemma25_bound = 0;         // (d-1)^2 - d + m
    bool lemma25_holds = false;

    long lemma27_lhs = 0;           // #{i: d_i > 1}
    long lemma27_rhs = 0;           // d - m
    bool lemma27_holds = false;

    bool lemma28_applicable = false;  // nonlinear factors irreducible-per-status
                                      // and sharing a common tangent
    long lemma28_tangent_count = 0;   // #T of the product of the nonlinear factors
    long lemma28_bound = 0;           // sum (d_i - 1) - k + 1 over those factors
    bool lemma28_holds = false;

    std::vector<FactorIrreducibility> irreducibility;

    std::optional<Thm14Result> thm14;  // present when d > 2
};

// Evaluates the factored-curve inequalities and the product identity in one
// pass. Requires an isolated singularity (throws std::domain_error when the
// product has infinite Milnor number).
LemmaReport structural_lemma_checks(const FactoredCurve& c);

// Contact bound for a singular one-tangent cubic against a conic through the
// origin: i0 < 6. Preconditions (each violation reported in the exception
// message): cubic of degree 3 vanishing at 0 with ord0 >= 2 and exactly one
// tangent; conic of degree 2 vanishing at 0 and rank-certified irreducible.
// The cubic's irreducibility is assumed, not verified.
struct ContactBoundResult {
    bool holds = false;  // i0 < 6
    ExtNat i0;
};

ContactBoundResult check_lemma41(const BiPoly& cubic, const BiPoly& conic);

}  // namespace milnor
