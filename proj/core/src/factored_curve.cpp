#include "milnor/factored_curve.hpp"

#include <stdexcept>

#include "milnor/gcd.hpp"

namespace milnor {

FactoredCurve FactoredCurve::make(std::vector<BiPoly> factors) {
    if (factors.empty())
        throw std::invalid_argument("FactoredCurve: empty factor list");
    for (const auto& f : factors) {
        if (f.is_zero() || f.is_constant())
            throw std::invalid_argument("FactoredCurve: constant or zero factor");
        if (!f.vanishes_at_origin())
            throw std::invalid_argument(
                "FactoredCurve: factor does not vanish at the origin");
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!gcd_bivariate(factors[i], factors[j]).is_constant())
                throw std::domain_error(
                    "FactoredCurve: non-isolated singularity (factors share a "
                    "component)");

    FactoredCurve c;
    c.factors_ = std::move(factors);
    for (const auto& f : c.factors_) {
        int d = *f.total_degree();
        c.degrees_.push_back(d);
        c.total_degree_ += d;
    }
    return c;
}

BiPoly FactoredCurve::product() const {
    BiPoly p = BiPoly::constant(1);
    for (const auto& f : factors_) p = p * f;
    return p;
}

std::vector<BiPoly> strip_units_at_origin(const std::vector<BiPoly>& factors) {
    std::vector<BiPoly> kept;
    for (const auto& f : factors)
        if (f.vanishes_at_origin()) kept.push_back(f);
    return kept;
}

}  // namespace milnor
