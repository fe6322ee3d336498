#include "zipfheaps/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace zipfheaps {

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n) {
    std::vector<std::uint64_t> checkpoints;
    if (n == 0) {
        return checkpoints;
    }
    for (std::uint64_t c = 1; c <= n; c *= 2) {
        checkpoints.push_back(c);
        if (c > n / 2) break;  // avoid overflow on c *= 2
    }
    if (checkpoints.back() != n) {
        checkpoints.push_back(n);
    }
    return checkpoints;
}

GrowthCurve simulate_growth_curve(const ZipfParams& params, std::uint64_t n,
                                  RandomStream& stream,
                                  const std::vector<std::uint64_t>& checkpoints) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || checkpoints[i] > n) {
            throw std::domain_error("simulate_growth_curve: checkpoints must lie in [1, n]");
        }
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
            throw std::domain_error(
                "simulate_growth_curve: checkpoints must be strictly increasing");
        }
    }

    GrowthCurve curve;
    curve.points.reserve(checkpoints.size());
    ZipfSampler sampler(params);
    std::unordered_set<std::uint64_t> seen;
    std::size_t next = 0;
    for (std::uint64_t m = 1; m <= n && next < checkpoints.size(); ++m) {
        seen.insert(sampler(stream));
        if (m == checkpoints[next]) {
            curve.points.push_back({m, seen.size()});
            ++next;
        }
    }
    return curve;
}

std::vector<std::uint64_t> per_trial_distinct(const ZipfParams& params, std::uint64_t n,
                                              std::uint64_t trials, std::uint64_t seed) {
    ZipfSampler sampler(params);
    std::vector<std::uint64_t> counts;
    counts.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomStream stream = RandomStream::derive(seed, t);
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t i = 0; i < n; ++i) {
            seen.insert(sampler(stream));
        }
        counts.push_back(seen.size());
    }
    return counts;
}

MCEstimate monte_carlo_distinct(const ZipfParams& params, std::uint64_t n,
                                std::uint64_t trials, std::uint64_t seed) {
    if (trials < 2) {
        throw std::domain_error("monte_carlo_distinct: requires trials >= 2");
    }
    const std::vector<std::uint64_t> counts = per_trial_distinct(params, n, trials, seed);
    double mean = 0.0;
    for (std::uint64_t c : counts) {
        mean += static_cast<double>(c);
    }
    mean /= static_cast<double>(trials);
    double ss = 0.0;
    for (std::uint64_t c : counts) {
        const double dev = static_cast<double>(c) - mean;
        ss += dev * dev;
    }
    const double variance = ss / static_cast<double>(trials - 1);
    const double std_error = std::sqrt(variance / static_cast<double>(trials));
    return MCEstimate{mean, std_error, trials};
}

}  // namespace zipfheaps
