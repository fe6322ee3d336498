#pragma once

#include <cstdint>

namespace zipfheaps {

// Deterministic 64-bit random stream (splitmix64). Pure integer arithmetic,
// so the same seed produces the same sequence on every platform.
//
// derive(seed, k) keys an independent sub-stream off a base seed. Distinct k
// give distinct state trajectories, so derived streams never share a prefix;
// this is what makes trial-level parallelism reproducible regardless of
// scheduling. Streams are cheap value types but must not be shared across
// concurrent tasks; derive one per task instead.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) noexcept : state_(seed) {}

    static RandomStream derive(std::uint64_t seed, std::uint64_t k) noexcept {
        std::uint64_t h = mix(seed + kGamma);
        // mix is a bijection, so for a fixed seed distinct k map to distinct states
        return RandomStream(mix(h ^ (k * kGamma + 1)));
    }

    std::uint64_t next_u64() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace zipfheaps
