#pragma once

#include <optional>
#include <string>

#include "milnor/bipoly.hpp"
#include "milnor/ext_nat.hpp"

namespace milnor {

// Bound values for a curve of degree d with m known components:
//   bezout  = (d-1)^2
//   main    = (d-1)^2 - floor(d/2)         (needs ord0 < d)
//   split   = (d-1)^2 - d + m              (needs the component count m)
//   order2  = (d-1)^2 - q(q-1), q = floor(d/2)   (needs ord0 = 2)
//   onebranch = (d-1)^2 - (d/d1 - 1)(d - ord0), d1 = gcd(ord0, d)
//               (needs a unibranch assertion plus a unique tangent meeting
//                the curve with multiplicity d)
// All values are exact integers; applicability travels separately.
struct BoundSet {
    long bezout = 0;
    long thm11 = 0;
    std::optional<long> lemma25;  // set only when m is known
    long gz = 0;
    long am = 0;
};

struct BoundVerdict {
    bool applicable = false;
    bool satisfied = false;       // meaningful only when applicable
    std::string reason;           // why inapplicable, when it is
};

struct AnalysisReport {
    int degree = 0;
    int order = 0;
    ExtNat milnor;
    int tangent_count = 0;

    BoundSet bounds;
    BoundVerdict bezout, thm11, lemma25, gz, am;

    bool homogeneous = false;  // ord0 f = deg f
    bool smooth = false;       // ord0 f = 1
    bool extremal = false;     // milnor finite and equal to the thm11 value
};

// Full local analysis of a single curve at the origin. Requires f nonzero,
// nonconstant and vanishing at the origin (throws std::invalid_argument
// otherwise). A non-isolated singularity yields milnor = infinity with every
// bound check skipped-with-reason.
AnalysisReport analyze_curve(const BiPoly& f, bool assume_unibranch = false);

}  // namespace milnor
