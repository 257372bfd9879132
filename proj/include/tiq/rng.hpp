#ifndef TIQ_RNG_HPP
#define TIQ_RNG_HPP

#include <cstdint>
#include <random>

namespace tiq {

// splitmix64 step; used to expand seeds and derive child streams.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream. A fixed seed yields an identical draw
/// sequence on every run; split() derives an independent child stream
/// without disturbing the parent's sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : split_state_(seed ^ 0x5851f42d4c957f2dULL) {
        std::uint64_t s = seed;
        eng_.seed(splitmix64_next(s));
    }

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint32_t below(std::uint32_t bound) {
        // rejection sampling keeps the draw exactly uniform
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r >= limit);
        return static_cast<std::uint32_t>(r % bound);
    }

    /// Bernoulli(p). Degenerate p consumes no randomness.
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

    Rng split() {
        return Rng(splitmix64_next(split_state_));
    }

private:
    std::mt19937_64 eng_;
    std::uint64_t split_state_;
};

} // namespace tiq

#endif
