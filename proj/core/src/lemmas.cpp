#include "milnor/lemmas.hpp"

#include <sstream>

#include "milnor/gcd.hpp"
#include "milnor/local_invariants.hpp"

namespace milnor {

std::string to_string(FactorIrreducibility s) {
    switch (s) {
        case FactorIrreducibility::VerifiedLinear: return "verified_linear";
        case FactorIrreducibility::VerifiedConic: return "verified_conic";
        case FactorIrreducibility::Refuted: return "refuted";
        case FactorIrreducibility::Assumed: return "assumed";
    }
    return "assumed";
}

bool conic_is_irreducible(const BiPoly& conic) {
    if (conic.total_degree() != 2)
        throw std::invalid_argument("conic_is_irreducible: degree != 2");
    // Symmetric matrix of the quadratic a*x^2 + b*xy + c*y^2 + d*x + e*y + k:
    //   [ a   b/2 d/2 ]
    //   [ b/2 c   e/2 ]
    //   [ d/2 e/2 k   ]
    // The conic splits into two lines over C exactly when the determinant
    // vanishes.
    Rational a = conic.coeff({2, 0});
    Rational b = conic.coeff({1, 1});
    Rational c = conic.coeff({0, 2});
    Rational d = conic.coeff({1, 0});
    Rational e = conic.coeff({0, 1});
    Rational k = conic.coeff({0, 0});
    Rational half(1, 2);
    Rational b2 = b * half, d2 = d * half, e2 = e * half;
    Rational det = a * (c * k - e2 * e2) - b2 * (b2 * k - e2 * d2) +
                   d2 * (b2 * e2 - c * d2);
    return det != 0;
}

FactorIrreducibility classify_factor(const BiPoly& factor) {
    int d = factor.total_degree().value_or(0);
    if (d <= 1) return FactorIrreducibility::VerifiedLinear;
    if (d == 2)
        return conic_is_irreducible(factor) ? FactorIrreducibility::VerifiedConic
                                            : FactorIrreducibility::Refuted;
    return FactorIrreducibility::Assumed;
}

ProductIdentityResult check_lemma21_identity(const FactoredCurve& c) {
    ProductIdentityResult r;
    r.mu_product = milnor_number(c.product());
    if (r.mu_product.is_infinite())
        throw std::domain_error("check_lemma21_identity: infinite Milnor number");

    std::uint64_t rhs = 0;
    for (const auto& f : c.factors()) {
        ExtNat mu = milnor_number(f);
        if (mu.is_infinite())
            throw std::domain_error("check_lemma21_identity: infinite factor invariant");
        r.mu_factors.push_back(mu);
        rhs += mu.value();
    }
    for (int i = 0; i < c.count(); ++i)
        for (int j = i + 1; j < c.count(); ++j) {
            ExtNat i0 = intersection_multiplicity(c.factors()[static_cast<std::size_t>(i)],
                                                  c.factors()[static_cast<std::size_t>(j)]);
            if (i0.is_infinite())
                throw std::domain_error(
                    "check_lemma21_identity: infinite pairwise intersection");
            rhs += 2 * i0.value();
        }

    r.lhs = ExtNat::of(r.mu_product.value() + static_cast<std::uint64_t>(c.count()) - 1);
    r.rhs = ExtNat::of(rhs);
    r.holds = (r.lhs == r.rhs);
    return r;
}

Thm14Result check_thm14(const FactoredCurve& c) {
    const int d = c.total_degree();
    if (d <= 2) throw std::invalid_argument("check_thm14: requires degree d > 2");

    Thm14Result r;
    r.d = d;
    r.d4_exception = (d == 4);

    ExtNat mu = milnor_number(c.product());
    if (mu.is_infinite())
        throw std::domain_error("check_thm14: non-isolated singularity");
    const long target = static_cast<long>(d - 1) * (d - 1) - d / 2;
    r.i_holds = (static_cast<long>(mu.value()) == target);

    // (ii): d - floor(d/2) components, all conics (plus one line when d is
    // odd), conics irreducible, pairwise contact 4, line tangent to each conic.
    r.component_count_ok = (c.count() == d - d / 2);

    std::vector<std::size_t> conics;
    std::vector<std::size_t> lines;
    for (std::size_t i = 0; i < c.factors().size(); ++i) {
        if (c.factor_degree(static_cast<int>(i)) == 2) conics.push_back(i);
        else if (c.factor_degree(static_cast<int>(i)) == 1) lines.push_back(i);
    }
    const bool even = (d % 2 == 0);
    r.degree_multiset_ok =
        conics.size() + lines.size() == c.factors().size() &&
        (even ? (lines.empty() && conics.size() == static_cast<std::size_t>(d) / 2)
              : (lines.size() == 1 &&
                 conics.size() == static_cast<std::size_t>(d - 1) / 2));

    r.conics_irreducible_ok = true;
    for (auto i : conics)
        if (!conic_is_irreducible(c.factors()[i])) r.conics_irreducible_ok = false;

    r.pairwise_contact_ok = true;
    for (std::size_t a = 0; a < conics.size(); ++a)
        for (std::size_t b = a + 1; b < conics.size(); ++b) {
            ExtNat i0 =
                intersection_multiplicity(c.factors()[conics[a]], c.factors()[conics[b]]);
            if (i0 != ExtNat::of(4)) r.pairwise_contact_ok = false;
        }

    r.line_tangency_ok = true;
    if (!even && lines.size() == 1) {
        for (auto i : conics)
            if (!is_tangent_line(c.factors()[i], c.factors()[lines[0]]))
                r.line_tangency_ok = false;
    }

    r.ii_holds = r.component_count_ok && r.degree_multiset_ok &&
                 r.conics_irreducible_ok && r.pairwise_contact_ok && r.line_tangency_ok;
    r.equivalence_holds = (r.i_holds == r.ii_holds);
    return r;
}

LemmaReport structural_lemma_checks(const FactoredCurve& c) {
    LemmaReport r;
    r.d = c.total_degree();
    r.m = c.count();
    r.milnor = milnor_number(c.product());
    if (r.milnor.is_infinite())
        throw std::domain_error("structural_lemma_checks: non-isolated singularity");
    const long mu = static_cast<long>(r.milnor.value());
    const long d = r.d, m = r.m;

    for (const auto& f : c.factors()) r.irreducibility.push_back(classify_factor(f));

    // Product identity.
    ProductIdentityResult identity = check_lemma21_identity(c);
    r.lemma21_applicable = true;
    r.lemma21_identity_holds = identity.holds;

    // Lambda: transverse pairs with a nonlinear member.
    long lambda = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool nonlinear = c.factor_degree(i) > 1 || c.factor_degree(j) > 1;
            if (nonlinear && is_transverse(c.factors()[static_cast<std::size_t>(i)],
                                           c.factors()[static_cast<std::size_t>(j)]))
                ++lambda;
        }
    r.lemma24_lambda_count = lambda;
    r.lemma24_bound = (d - 1) * (d - 1) - d + m - 2 * lambda;
    r.lemma24_holds = mu <= r.lemma24_bound;

    r.lemma25_bound = (d - 1) * (d - 1) - d + m;
    r.lemma25_holds = mu <= r.lemma25_bound;

    long nonlinear_count = 0;
    for (int i = 0; i < m; ++i)
        if (c.factor_degree(i) > 1) ++nonlinear_count;
    r.lemma27_lhs = nonlinear_count;
    r.lemma27_rhs = d - m;
    r.lemma27_holds = r.lemma27_lhs <= r.lemma27_rhs;

    // Tangent-count bound over the nonlinear factors: applicable when every
    // one of them is irreducible-per-status and they share a common tangent.
    std::vector<std::size_t> nonlinear;
    for (std::size_t i = 0; i < c.factors().size(); ++i)
        if (c.factor_degree(static_cast<int>(i)) > 1) nonlinear.push_back(i);

    r.lemma28_applicable = !nonlinear.empty();
    for (auto i : nonlinear)
        if (r.irreducibility[i] == FactorIrreducibility::Refuted)
            r.lemma28_applicable = false;
    if (r.lemma28_applicable && nonlinear.size() > 1) {
        BiPoly common = lowest_form(c.factors()[nonlinear[0]]).form;
        for (std::size_t k = 1; k < nonlinear.size() && !common.is_constant(); ++k)
            common = gcd_bivariate(common, lowest_form(c.factors()[nonlinear[k]]).form);
        if (common.is_constant()) r.lemma28_applicable = false;
    }
    if (r.lemma28_applicable) {
        BiPoly prod = BiPoly::constant(1);
        long bound = 1 - static_cast<long>(nonlinear.size());
        for (auto i : nonlinear) {
            prod = prod * c.factors()[i];
            bound += c.factor_degree(static_cast<int>(i)) - 1;
        }
        r.lemma28_tangent_count = tangent_data(prod).distinct_count;
        r.lemma28_bound = bound;
        r.lemma28_holds = r.lemma28_tangent_count <= r.lemma28_bound;
    }

    if (r.d > 2) r.thm14 = check_thm14(c);
    return r;
}

ContactBoundResult check_lemma41(const BiPoly& cubic, const BiPoly& conic) {
    std::ostringstream problems;
    auto complain = [&](const char* what) { problems << what << "; "; };

    if (cubic.is_zero() || cubic.total_degree() != 3)
        complain("first curve must have degree 3");
    else {
        if (!cubic.vanishes_at_origin())
            complain("cubic must pass through the origin");
        else {
            TangentData t = tangent_data(cubic);
            if (t.order < 2) complain("cubic must be singular at the origin (ord0 >= 2)");
            if (t.distinct_count != 1) complain("cubic must have exactly one tangent");
        }
    }
    if (conic.is_zero() || conic.total_degree() != 2)
        complain("second curve must have degree 2");
    else {
        if (!conic.vanishes_at_origin())
            complain("conic must pass through the origin");
        if (!conic_is_irreducible(conic)) complain("conic must be irreducible (rank 3)");
    }
    std::string msg = problems.str();
    if (!msg.empty())
        throw std::invalid_argument("check_lemma41: " + msg.substr(0, msg.size() - 2));

    ContactBoundResult r;
    r.i0 = intersection_multiplicity(cubic, conic);
    r.holds = r.i0 < ExtNat::of(6);
    return r;
}

}  // namespace milnor
