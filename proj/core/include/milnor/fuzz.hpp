#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/generators.hpp"

namespace milnor {

struct Violation {
    int trial = 0;
    std::uint64_t substream_seed = 0;  // SplitMix64 substream state for replay
    std::string property;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct FuzzSummary {
    int trials_requested = 0;
    int trials_run = 0;

    // Checks evaluated, per property.
    int checked_identity = 0;       // product identity (always)
    int checked_main_bound = 0;     // mu <= (d-1)^2 - floor(d/2), needs ord < d
    int checked_order2_bound = 0;   // GZ bound, needs ord = 2
    int checked_lemma27 = 0;        // always
    int checked_lemma2425 = 0;      // needs every factor single-component certified
    int checked_oracle = 0;         // Fulton vs linear-algebra agreement

    // Skips, per reason.
    int skipped_homogeneous = 0;    // ord = d: main bound inapplicable
    int skipped_uncertified = 0;    // lemma 2.4/2.5 hypothesis not certifiable

    std::vector<Violation> violations;

    friend bool operator==(const FuzzSummary&, const FuzzSummary&) = default;
};

// Runs cfg.trials seeded trials; every generated curve is checked against the
// product identity, the degree bounds and the factored-curve inequalities
// (each under its own applicability guard). Violations are data, not errors:
// they carry the trial index and substream seed for exact replay. Identical
// configs produce identical summaries.
FuzzSummary fuzz_campaign(const FuzzConfig& cfg);

}  // namespace milnor
