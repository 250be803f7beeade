#include <doctest.h>

#include "milnor/fuzz.hpp"
#include "milnor/reporting.hpp"

using namespace milnor;

TEST_SUITE("fuzz") {

TEST_CASE("zero trials give an empty summary") {
    FuzzConfig cfg;
    cfg.seed = 7;
    cfg.trials = 0;
    FuzzSummary s = fuzz_campaign(cfg);
    CHECK(s.trials_run == 0);
    CHECK(s.violations.empty());
    CHECK(s.checked_identity == 0);
}

TEST_CASE("small campaign runs clean") {
    FuzzConfig cfg;
    cfg.seed = 7;
    cfg.trials = 60;
    FuzzSummary s = fuzz_campaign(cfg);
    CHECK(s.trials_run == 60);
    CHECK(s.violations.empty());
    CHECK(s.checked_identity == 60);
    CHECK(s.checked_lemma27 == 60);
    // the certification guard engages on most trials
    CHECK(s.checked_lemma2425 + s.skipped_uncertified == 60);
    CHECK(s.checked_main_bound + s.skipped_homogeneous == 60);
}

TEST_CASE("identical configs produce identical summaries") {
    FuzzConfig cfg;
    cfg.seed = 20260809;
    cfg.trials = 40;
    FuzzSummary a = fuzz_campaign(cfg);
    FuzzSummary b = fuzz_campaign(cfg);
    CHECK(a == b);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("different seeds explore different curves") {
    FuzzConfig cfg;
    cfg.trials = 1;
    SplitMix64 a = SplitMix64::substream(1, 0);
    SplitMix64 b = SplitMix64::substream(2, 0);
    FactoredCurve ca = random_factored_curve(a, cfg);
    FactoredCurve cb = random_factored_curve(b, cfg);
    bool same = ca.count() == cb.count();
    if (same)
        for (int i = 0; i < ca.count(); ++i)
            if (!(ca.factors()[static_cast<std::size_t>(i)] ==
                  cb.factors()[static_cast<std::size_t>(i)]))
                same = false;
    CHECK(!same);
}

TEST_CASE("oracle subsample cross-checks agree") {
    FuzzConfig cfg;
    cfg.seed = 11;
    cfg.trials = 12;
    cfg.oracle_subsample = 4;
    FuzzSummary s = fuzz_campaign(cfg);
    CHECK(s.checked_oracle == 3);  // trials 0, 4, 8
    CHECK(s.violations.empty());
}

TEST_CASE("degenerate config is rejected") {
    FuzzConfig cfg;
    cfg.seed = 1;
    cfg.trials = 1;
    cfg.coeff_bound = 0;
    CHECK_THROWS_AS(fuzz_campaign(cfg), std::invalid_argument);
}

}
