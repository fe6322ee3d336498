#pragma once

#include <cstdint>
#include <vector>

#include "zipfheaps/zipf.hpp"

namespace zipfheaps {

struct GrowthPoint {
    std::uint64_t m;  // tokens seen
    std::uint64_t d;  // distinct ranks seen
};

// Empirical vocabulary-growth curve: m strictly increasing, d nondecreasing,
// d <= m.
struct GrowthCurve {
    std::vector<GrowthPoint> points;
};

// 1, 2, 4, ..., plus n itself when n is not a power of two. Empty for n = 0.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n);

// Single pass of n draws, recording the exact distinct-so-far count (hash-set
// membership) at each checkpoint. Checkpoints must be strictly increasing,
// within [1, n]; otherwise std::domain_error.
GrowthCurve simulate_growth_curve(const ZipfParams& params, std::uint64_t n,
                                  RandomStream& stream,
                                  const std::vector<std::uint64_t>& checkpoints);

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

// Distinct count of each trial; trial t runs on RandomStream::derive(seed, t),
// so per-trial results do not depend on execution order or partitioning.
std::vector<std::uint64_t> per_trial_distinct(const ZipfParams& params, std::uint64_t n,
                                              std::uint64_t trials, std::uint64_t seed);

// Mean and standard error of the distinct count over independent trials
// (trials >= 2, else std::domain_error).
MCEstimate monte_carlo_distinct(const ZipfParams& params, std::uint64_t n,
                                std::uint64_t trials, std::uint64_t seed);

}  // namespace zipfheaps
