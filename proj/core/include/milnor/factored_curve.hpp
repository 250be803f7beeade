#pragma once

#include <vector>

#include "milnor/bipoly.hpp"

namespace milnor {

// Ordered factor list f_1,...,f_m with every f_i nonconstant and vanishing at
// the origin, representing the curve f = f_1 * ... * f_m. Pairwise coprimality
// is enforced at construction: a shared component through the origin means a
// non-isolated singularity and is rejected for analysis (this also rejects
// repeated factors).
class FactoredCurve {
  public:
    // Throws std::invalid_argument on an empty list, a zero/constant factor or
    // a factor not vanishing at the origin; std::domain_error when two factors
    // share a nonconstant common divisor.
    static FactoredCurve make(std::vector<BiPoly> factors);

    const std::vector<BiPoly>& factors() const { return factors_; }
    int count() const { return static_cast<int>(factors_.size()); }     // m
    int factor_degree(int i) const { return degrees_[i]; }              // d_i
    int total_degree() const { return total_degree_; }                  // d
    BiPoly product() const;

  private:
    FactoredCurve() = default;
    std::vector<BiPoly> factors_;
    std::vector<int> degrees_;
    int total_degree_ = 0;
};

// Drops factors with f(0,0) != 0 (they change no local invariant at the
// origin). Convenience splitter for callers holding a full factorization.
std::vector<BiPoly> strip_units_at_origin(const std::vector<BiPoly>& factors);

}  // namespace milnor
