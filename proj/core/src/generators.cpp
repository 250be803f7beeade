#include "milnor/generators.hpp"

#include <string>

#include "milnor/gcd.hpp"
#include "milnor/lemmas.hpp"
#include "milnor/local_invariants.hpp"

namespace milnor {

FactoredCurve gen_extremal(int d) {
    if (d < 2) throw std::invalid_argument("gen_extremal: requires d >= 2");
    std::vector<BiPoly> factors;
    const BiPoly x = BiPoly::variable(Var::X);
    const BiPoly y = BiPoly::variable(Var::Y);
    if (d % 2 != 0) factors.push_back(x);
    for (int i = 1; i <= d / 2; ++i)
        factors.push_back(x + BiPoly::term({2, 0}, i) + y * y);
    return FactoredCurve::make(std::move(factors));
}

BiPoly gen_irreducible_max(int d) {
    if (d < 2) throw std::invalid_argument("gen_irreducible_max: requires d >= 2");
    return BiPoly::term({d - 1, 0}, 1) + BiPoly::term({0, d}, 1);
}

void validate_config(const FuzzConfig& cfg) {
    if (cfg.trials < 0) throw std::invalid_argument("fuzz config: trials must be >= 0");
    if (cfg.max_factors < 1)
        throw std::invalid_argument("fuzz config: max factors must be >= 1");
    if (cfg.max_factor_degree < 1)
        throw std::invalid_argument("fuzz config: max factor degree must be >= 1");
    if (cfg.coeff_bound < 1)
        throw std::invalid_argument(
            "fuzz config: coefficient bound must be >= 1 (cannot produce nonconstant "
            "factors otherwise)");
    if (cfg.oracle_subsample < 0)
        throw std::invalid_argument("fuzz config: oracle subsample must be >= 0");
}

namespace {

// One random factor: integer coefficients in [-B, B] on the monomials of
// total degree 1..deg, zero constant term, resampled until nonconstant.
BiPoly random_factor(SplitMix64& rng, int max_degree, int coeff_bound, int budget) {
    for (int attempt = 0; attempt < budget; ++attempt) {
        int deg = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_degree))) + 1;
        BiPoly f;
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j) {
                if (i + j == 0) continue;
                long c = rng.next_in(-coeff_bound, coeff_bound);
                if (c != 0) f.add_term({i, j}, c);
            }
        if (!f.is_zero() && !f.is_constant()) return f;
    }
    throw std::runtime_error("random_factored_curve: factor resampling budget exhausted");
}

}  // namespace

FactoredCurve random_factored_curve(SplitMix64& rng, const FuzzConfig& cfg) {
    validate_config(cfg);
    constexpr int kListBudget = 400;
    constexpr int kFactorBudget = 400;
    for (int attempt = 0; attempt < kListBudget; ++attempt) {
        int m = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(cfg.max_factors))) + 1;
        std::vector<BiPoly> factors;
        for (int i = 0; i < m; ++i)
            factors.push_back(
                random_factor(rng, cfg.max_factor_degree, cfg.coeff_bound, kFactorBudget));

        bool coprime = true;
        for (std::size_t i = 0; i < factors.size() && coprime; ++i)
            for (std::size_t j = i + 1; j < factors.size() && coprime; ++j)
                if (!gcd_bivariate(factors[i], factors[j]).is_constant()) coprime = false;
        if (!coprime) continue;

        BiPoly product = BiPoly::constant(1);
        for (const auto& f : factors) product = product * f;
        if (milnor_number(product).is_infinite()) continue;

        return FactoredCurve::make(std::move(factors));
    }
    throw std::runtime_error("random_factored_curve: list resampling budget exhausted");
}

BiPoly random_one_tangent_cubic(SplitMix64& rng) {
    // Base curve y^2*(1 - a*x) - x^3: absolutely irreducible for every integer
    // a (a nontrivial factorization would force q(x)^2*(1-a*x) = x^3 in Q[x]),
    // with a cusp at the origin. Push it through a random invertible integer
    // linear substitution; degree, order, tangent count and irreducibility are
    // all preserved.
    for (;;) {
        long a = rng.next_in(-3, 3);
        BiPoly base = BiPoly::term({0, 2}, 1) - BiPoly::term({1, 2}, a) - BiPoly::term({3, 0}, 1);
        long p = rng.next_in(-4, 4), q = rng.next_in(-4, 4);
        long r = rng.next_in(-4, 4), s = rng.next_in(-4, 4);
        if (p * s - q * r == 0) continue;
        BiPoly f = base.substitute_linear(p, q, r, s);
        if (f.total_degree() != 3) continue;  // degenerate substitution guard
        TangentData t = tangent_data(f);
        if (t.order != 2 || t.distinct_count != 1) continue;
        return f;
    }
}

BiPoly random_irreducible_conic(SplitMix64& rng, int coeff_bound) {
    for (;;) {
        BiPoly q;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; i + j <= 2; ++j) {
                if (i + j == 0) continue;
                long c = rng.next_in(-coeff_bound, coeff_bound);
                if (c != 0) q.add_term({i, j}, c);
            }
        if (q.total_degree() != 2) continue;
        if (!conic_is_irreducible(q)) continue;
        return q;
    }
}

}  // namespace milnor
