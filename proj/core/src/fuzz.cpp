#include "milnor/fuzz.hpp"

#include <sstream>

#include "milnor/gcd.hpp"
#include "milnor/lemmas.hpp"
#include "milnor/local_invariants.hpp"
#include "milnor/oracle.hpp"
#include "milnor/poly_text.hpp"

namespace milnor {

namespace {

// Certificate that a factor of degree <= 3 has exactly one component through
// the origin, which is what the component-count bounds assume of each list
// entry. Decidable without factorization:
//   - degree 1: a line;
//   - ord0 = 1: a smooth point lies on exactly one component;
//   - nonlinear homogeneous: a product of >= 2 lines through the origin
//     (counted over C) -- refused;
//   - degree 3, ord0 2: exactly one component unless a rational line through
//     the origin divides f, or the quadratic lowest form divides f (the shape
//     a conjugate pair of complex line components multiplies into).
bool single_component_certified(const BiPoly& f) {
    const int d = *f.total_degree();
    const int ord = static_cast<int>(f.order_at_origin().value());
    if (d == 1 || ord == 1) return true;
    if (ord == d) return false;  // nonlinear homogeneous
    if (d == 3 && ord == 2) {
        const BiPoly cone = lowest_form(f).form;
        const Rational a = cone.coeff({2, 0});
        const Rational b = cone.coeff({1, 1});
        const Rational c = cone.coeff({0, 2});
        if (a == 0) {
            // cone = y*(b*x + c*y)
            if (divides_exactly(BiPoly::variable(Var::Y), f)) return false;
            BiPoly other = BiPoly::term({1, 0}, b) + BiPoly::term({0, 1}, c);
            if (b != 0 && divides_exactly(other, f)) return false;
            return true;
        }
        const Rational disc = b * b - 4 * a * c;
        const Integer num = disc.get_num();
        const Integer den = disc.get_den();
        const bool square =
            disc >= 0 && mpz_perfect_square_p(num.get_mpz_t()) != 0 &&
            mpz_perfect_square_p(den.get_mpz_t()) != 0;
        if (square) {
            Integer sn, sd;
            mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
            const Rational s = make_rational(sn, sd);
            const Rational half(1, 2);
            const Rational root1 = (-b + s) * half / a;
            const Rational root2 = (-b - s) * half / a;
            for (const Rational& root : {root1, root2}) {
                // line x - root*y
                BiPoly line = BiPoly::variable(Var::X) - BiPoly::term({0, 1}, root);
                if (divides_exactly(line, f)) return false;
            }
            return true;
        }
        // Irrational or complex tangent pair: components would come as the
        // conjugate pair whose product is the cone itself.
        return !divides_exactly(cone, f);
    }
    // Degrees beyond the generator's range: no certificate.
    return false;
}

std::string describe_curve(const FactoredCurve& c) {
    std::ostringstream os;
    for (int i = 0; i < c.count(); ++i) {
        if (i) os << " ; ";
        os << format_poly(c.factors()[static_cast<std::size_t>(i)]);
    }
    return os.str();
}

}  // namespace

FuzzSummary fuzz_campaign(const FuzzConfig& cfg) {
    validate_config(cfg);
    FuzzSummary s;
    s.trials_requested = cfg.trials;

    for (int trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng = SplitMix64::substream(cfg.seed, static_cast<std::uint64_t>(trial));
        const std::uint64_t substream_seed = rng.state();
        FactoredCurve c = random_factored_curve(rng, cfg);
        ++s.trials_run;

        auto violated = [&](const char* property, const std::string& detail) {
            s.violations.push_back(
                Violation{trial, substream_seed, property,
                          detail + " | factors: " + describe_curve(c)});
        };

        const BiPoly f = c.product();
        const long d = c.total_degree();
        const long m = c.count();
        const ExtNat mu_ext = milnor_number(f);
        if (mu_ext.is_infinite()) {
            // random_factored_curve guarantees finiteness; reaching this is a bug
            violated("generator", "non-isolated curve escaped the generator");
            continue;
        }
        const long mu = static_cast<long>(mu_ext.value());
        const int ord = static_cast<int>(f.order_at_origin().value());

        // Product identity, valid for any coprime factorization through 0.
        ++s.checked_identity;
        try {
            ProductIdentityResult identity = check_lemma21_identity(c);
            if (!identity.holds)
                violated("lemma2.1", "lhs " + identity.lhs.to_string() + " != rhs " +
                                         identity.rhs.to_string());
        } catch (const std::domain_error& e) {
            violated("lemma2.1", std::string("unexpected infinite invariant: ") + e.what());
        }

        // Degree bound for non-homogeneous curves.
        if (ord < d) {
            ++s.checked_main_bound;
            const long bound = (d - 1) * (d - 1) - d / 2;
            if (mu > bound)
                violated("thm1.1", "mu " + std::to_string(mu) + " > bound " +
                                       std::to_string(bound));
        } else {
            ++s.skipped_homogeneous;
        }

        // Order-2 bound.
        if (ord == 2) {
            ++s.checked_order2_bound;
            const long q = d / 2;
            const long bound = (d - 1) * (d - 1) - q * (q - 1);
            if (mu > bound)
                violated("gz", "mu " + std::to_string(mu) + " > bound " +
                                   std::to_string(bound));
        }

        // Nonlinear-factor count bound, valid for any nonconstant factors.
        ++s.checked_lemma27;
        long nonlinear = 0;
        for (int i = 0; i < c.count(); ++i)
            if (c.factor_degree(i) > 1) ++nonlinear;
        if (nonlinear > d - m)
            violated("lemma2.7", std::to_string(nonlinear) + " nonlinear factors > " +
                                     std::to_string(d - m));

        // Component-count bounds: need every factor to be a single component
        // through the origin.
        bool certified = true;
        for (const auto& factor : c.factors())
            if (!single_component_certified(factor)) certified = false;
        if (certified) {
            ++s.checked_lemma2425;
            long lambda = 0;
            for (int i = 0; i < c.count(); ++i)
                for (int j = i + 1; j < c.count(); ++j) {
                    bool nl = c.factor_degree(i) > 1 || c.factor_degree(j) > 1;
                    if (nl && is_transverse(c.factors()[static_cast<std::size_t>(i)],
                                            c.factors()[static_cast<std::size_t>(j)]))
                        ++lambda;
                }
            const long bound24 = (d - 1) * (d - 1) - d + m - 2 * lambda;
            if (mu > bound24)
                violated("lemma2.4", "mu " + std::to_string(mu) + " > bound " +
                                         std::to_string(bound24));
            const long bound25 = (d - 1) * (d - 1) - d + m;
            if (mu > bound25)
                violated("lemma2.5", "mu " + std::to_string(mu) + " > bound " +
                                         std::to_string(bound25));
        } else {
            ++s.skipped_uncertified;
        }

        // Cross-validation of the reduction against the linear-algebra oracle.
        if (cfg.oracle_subsample > 0 && trial % cfg.oracle_subsample == 0) {
            ++s.checked_oracle;
            for (int i = 0; i < c.count(); ++i) {
                const BiPoly& fi = c.factors()[static_cast<std::size_t>(i)];
                if (oracle::milnor_oracle(fi) != milnor_number(fi))
                    violated("oracle", "milnor mismatch on factor " +
                                           format_poly(fi));
                for (int j = i + 1; j < c.count(); ++j) {
                    const BiPoly& fj = c.factors()[static_cast<std::size_t>(j)];
                    if (oracle::local_quotient_dimension(fi, fj) !=
                        intersection_multiplicity(fi, fj))
                        violated("oracle", "i0 mismatch on pair " + format_poly(fi) +
                                               " , " + format_poly(fj));
                }
            }
        }
    }
    return s;
}

}  // namespace milnor
