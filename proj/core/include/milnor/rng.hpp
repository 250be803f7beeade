#pragma once

#include <cstdint>

namespace milnor {

// SplitMix64 (Steele/Lea/Flood): 64-bit deterministic generator with a fixed,
// documented state-update and output mix. All randomized machinery in this
// library draws from it directly so that seeds reproduce bit-identically
// across platforms and standard-library versions (std:: distributions are not
// portable). Substreams for trial i are seeded as mix(seed ^ mix(i+1)), which
// decorrelates per-trial streams from each other and from the root seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix(seed ^ mix(index + 1)));
    }

    std::uint64_t state() const { return state_; }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in [0, bound); bound >= 1. Rejection sampling on the top
    // partial block keeps the draw unbiased and fully deterministic.
    std::uint64_t next_below(std::uint64_t bound) {
        for (;;) {
            std::uint64_t r = next();
            std::uint64_t v = r % bound;
            if (r - v <= ~std::uint64_t{0} - (bound - 1)) return v;
        }
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool next_bool() { return (next() & 1) != 0; }

  private:
    std::uint64_t state_;
};

}  // namespace milnor
