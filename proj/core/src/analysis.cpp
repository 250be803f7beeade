#include "milnor/analysis.hpp"

#include <numeric>

#include "milnor/gcd.hpp"
#include "milnor/local_invariants.hpp"

namespace milnor {

AnalysisReport analyze_curve(const BiPoly& f, bool assume_unibranch) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("analyze_curve: constant or zero polynomial");
    if (!f.vanishes_at_origin())
        throw std::invalid_argument("analyze_curve: curve does not pass through the origin");

    AnalysisReport r;
    const long d = *f.total_degree();
    r.degree = static_cast<int>(d);
    TangentData tangent = tangent_data(f);
    r.order = tangent.order;
    r.tangent_count = tangent.distinct_count;
    r.milnor = milnor_number(f);
    r.homogeneous = (r.order == r.degree);
    r.smooth = (r.order == 1);

    const long q = d / 2;
    r.bounds.bezout = (d - 1) * (d - 1);
    r.bounds.thm11 = (d - 1) * (d - 1) - q;
    r.bounds.gz = (d - 1) * (d - 1) - q * (q - 1);
    const long d1 = std::gcd(static_cast<long>(r.order), d);
    r.bounds.am = (d - 1) * (d - 1) - (d / d1 - 1) * (d - r.order);
    r.bounds.lemma25.reset();  // needs a component count; not available here

    const bool finite = r.milnor.is_finite();
    const char* kNonIsolated = "non-isolated singularity (milnor number infinite)";

    auto check = [&](BoundVerdict& v, bool condition, const char* why, long bound) {
        if (!finite) {
            v = {false, false, kNonIsolated};
        } else if (!condition) {
            v = {false, false, why};
        } else {
            v = {true, static_cast<long>(r.milnor.value()) <= bound, ""};
        }
    };

    check(r.bezout, true, "", r.bounds.bezout);
    check(r.thm11, r.order < r.degree, "requires ord0 f < deg f", r.bounds.thm11);
    check(r.gz, r.order == 2, "requires ord0 f = 2", r.bounds.gz);
    r.lemma25 = {false, false, "requires a factorization into components"};

    if (!finite) {
        r.am = {false, false, kNonIsolated};
    } else if (!assume_unibranch) {
        r.am = {false, false, "requires --assume-unibranch"};
    } else if (tangent.distinct_count != 1) {
        r.am = {false, false, "requires a unique tangent line"};
    } else {
        // Unique tangent: the squarefree part of the cone is the (rational)
        // tangent line; the testable half of the hypothesis is i0(f, l) = d.
        BiPoly line = squarefree_part_binary(tangent.cone).form;
        ExtNat contact = intersection_multiplicity(f, line);
        if (contact != ExtNat::of(static_cast<std::uint64_t>(d))) {
            r.am = {false, false,
                    "requires the tangent to meet the curve with multiplicity d"};
        } else {
            r.am = {true, static_cast<long>(r.milnor.value()) <= r.bounds.am, ""};
        }
    }

    // extremal only where the non-homogeneity hypothesis holds (a line has
    // milnor 0 = bound 0 but ord = d, which the flag must not count)
    r.extremal = r.thm11.applicable && finite &&
                 static_cast<long>(r.milnor.value()) == r.bounds.thm11;
    return r;
}

}  // namespace milnor
