#pragma once

#include <cstdint>

namespace domh {

/// SplitMix64 generator (Steele/Lea/Flood). Counter-based, so streams are
/// reproducible across platforms; all sampling goes through integer
/// thresholds, never long double state.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed, uint64_t stream = 0)
    {
        state_ = seed;
        // decorrelate substreams: burn the stream index through the mixer
        state_ = mix(state_ + stream * 0x9e3779b97f4a7c15ull);
    }

    uint64_t next()
    {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform integer in [0, bound). bound must be > 0.
    uint64_t next_below(uint64_t bound)
    {
        return uint64_t((__uint128_t(next()) * bound) >> 64);
    }

    /// Uniform integer in [lo, hi] inclusive.
    int64_t next_in(int64_t lo, int64_t hi)
    {
        return lo + int64_t(next_below(uint64_t(hi - lo + 1)));
    }

    /// Bernoulli draw. p is converted to a 53-bit integer threshold once so
    /// the comparison is exact and platform independent.
    bool next_bool(double p)
    {
        uint64_t threshold = uint64_t(p * 9007199254740992.0); // p * 2^53
        return (next() >> 11) < threshold;
    }

    static uint64_t mix(uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_ = 0;
};

} // namespace domh
