#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "zipfheaps/fit.hpp"
#include "zipfheaps/simulate.hpp"
#include "zipfheaps/special_functions.hpp"
#include "zipfheaps/zipf.hpp"

using namespace zipfheaps;

namespace {

GrowthCurve curve_of(std::vector<GrowthPoint> pts) {
    GrowthCurve c;
    c.points = std::move(pts);
    return c;
}

RankFrequency table_from_counts(const std::unordered_map<std::uint64_t, std::uint64_t>& counts) {
    RankFrequency t;
    t.entries.reserve(counts.size());
    for (const auto& [rank, count] : counts) {
        t.entries.push_back({std::to_string(rank), count});
    }
    std::sort(t.entries.begin(), t.entries.end(), [](const RankEntry& a, const RankEntry& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.token < b.token;
    });
    return t;
}

RankFrequency sampled_table(double alpha, std::uint64_t n, std::uint64_t seed) {
    ZipfParams p(alpha);
    ZipfSampler sampler(p);
    RandomStream s = RandomStream::derive(seed, 0);
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < n; ++i) {
        ++counts[sampler(s)];
    }
    return table_from_counts(counts);
}

// log-likelihood per the fitted law, for the local-maximum certificate
double loglik(const RankFrequency& t, double alpha) {
    double total = 0.0;
    double sum_log_rank = 0.0;
    for (std::size_t j = 0; j < t.entries.size(); ++j) {
        total += static_cast<double>(t.entries[j].count);
        sum_log_rank +=
            static_cast<double>(t.entries[j].count) * std::log(static_cast<double>(j + 1));
    }
    return -alpha * sum_log_rank - total * std::log(zeta(alpha));
}

}  // namespace

TEST_CASE("noiseless power law is recovered exactly") {
    // d = 3 m^0.5 on squares keeps d integral
    const GrowthCurve c =
        curve_of({{1, 3}, {100, 30}, {10000, 300}, {1000000, 3000}});
    const FitResult f = fit_heaps(c, 1);
    CHECK(std::abs(f.exponent - 0.5) < 1e-12);
    CHECK(std::abs(f.log_intercept - std::log(3.0)) < 1e-12);
    CHECK(f.residual_rms < 1e-12);
    CHECK(f.points_used == 4);
}

TEST_CASE("constant curve fits slope zero") {
    const GrowthCurve c = curve_of({{1, 5}, {10, 5}, {100, 5}});
    const FitResult f = fit_heaps(c, 1);
    CHECK(std::abs(f.exponent) < 1e-14);
    CHECK(f.log_intercept == doctest::Approx(std::log(5.0)).epsilon(1e-14));
}

TEST_CASE("scaling d only shifts the intercept") {
    const GrowthCurve base = curve_of({{10, 4}, {100, 13}, {1000, 40}, {10000, 126}});
    GrowthCurve scaled = base;
    for (GrowthPoint& p : scaled.points) {
        p.d *= 7;
    }
    const FitResult fb = fit_heaps(base, 1);
    const FitResult fs = fit_heaps(scaled, 1);
    CHECK(fs.exponent == doctest::Approx(fb.exponent).epsilon(1e-12));
    CHECK(fs.log_intercept ==
          doctest::Approx(fb.log_intercept + std::log(7.0)).epsilon(1e-12));
}

TEST_CASE("min_m filters and the fit demands two points") {
    const GrowthCurve c = curve_of({{1, 1}, {10, 5}, {100, 12}});
    CHECK(fit_heaps(c, 10).points_used == 2);
    CHECK_THROWS_AS(fit_heaps(c, 101), std::domain_error);
    CHECK_THROWS_AS(fit_heaps(curve_of({}), 1), std::domain_error);
    // zero distinct counts never qualify
    CHECK_THROWS_AS(fit_heaps(curve_of({{5, 0}, {6, 0}}), 1), std::domain_error);
}

TEST_CASE("simulated curve at alpha=2 fits beta near 1/2") {
    ZipfParams p(2.0);
    RandomStream s = RandomStream::derive(42, 0);
    const GrowthCurve curve =
        simulate_growth_curve(p, 1000000, s, geometric_checkpoints(1000000));
    const FitResult f = fit_heaps(curve, 1000);
    CHECK(std::abs(f.exponent - 0.5) < 0.05);
}

TEST_CASE("MLE recovers alpha from sampled corpora") {
    const FitResult f2 = fit_zipf_alpha(sampled_table(2.0, 1000000, 42));
    CHECK(std::abs(f2.exponent - 2.0) < 0.05);
    const FitResult f3 = fit_zipf_alpha(sampled_table(3.0, 1000000, 42));
    CHECK(std::abs(f3.exponent - 3.0) < 0.10);
}

TEST_CASE("fitted alpha is a local maximum of the likelihood") {
    const RankFrequency t = sampled_table(2.0, 100000, 5);
    const FitResult f = fit_zipf_alpha(t);
    const double at_hat = loglik(t, f.exponent);
    CHECK(at_hat >= loglik(t, f.exponent + 0.01));
    CHECK(at_hat >= loglik(t, f.exponent - 0.01));
}

TEST_CASE("degenerate tables are rejected") {
    CHECK_THROWS_AS(fit_zipf_alpha(RankFrequency{}), std::domain_error);
    RankFrequency single;
    single.entries.push_back({"only", 1000});
    CHECK_THROWS_AS(fit_zipf_alpha(single), std::domain_error);
    RankFrequency unsorted;
    unsorted.entries.push_back({"a", 1});
    unsorted.entries.push_back({"b", 5});
    CHECK_THROWS_AS(fit_zipf_alpha(unsorted), std::domain_error);
}

TEST_CASE("two equal counts still yield an interior maximum") {
    // mean log-rank ln(2)/2 is matched by an interior alpha (~2.37) under the
    // infinite-support law; certify it is the likelihood's local maximum
    RankFrequency t;
    t.entries.push_back({"a", 50});
    t.entries.push_back({"b", 50});
    const FitResult f = fit_zipf_alpha(t);
    CHECK(f.exponent > 1.0 + 1e-6);
    CHECK(f.exponent < 20.0);
    const double at_hat = loglik(t, f.exponent);
    CHECK(at_hat >= loglik(t, f.exponent + 0.01));
    CHECK(at_hat >= loglik(t, f.exponent - 0.01));
}

TEST_CASE("estimate error shrinks with sample size across seeds") {
    // 20 fixed seeds, nested samples at N = 1e4, 1e5, 1e6. Per-seed full
    // monotone chains hold only ~70% of the time for any correct MLE (the
    // three half-normal errors are weakly correlated), so the stable
    // formulation is endpoint decrease per seed plus RMS decrease per level.
    ZipfParams p(2.0);
    ZipfSampler sampler(p);
    int endpoint_ok = 0;
    double rms[3] = {0.0, 0.0, 0.0};
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        RandomStream s = RandomStream::derive(seed, 0);
        std::unordered_map<std::uint64_t, std::uint64_t> counts;
        std::uint64_t drawn = 0;
        double errs[3];
        int level = 0;
        for (std::uint64_t target : {10000ull, 100000ull, 1000000ull}) {
            while (drawn < target) {
                ++counts[sampler(s)];
                ++drawn;
            }
            const FitResult f = fit_zipf_alpha(table_from_counts(counts));
            errs[level] = std::abs(f.exponent - 2.0);
            rms[level] += errs[level] * errs[level];
            ++level;
        }
        if (errs[2] < errs[0]) {
            ++endpoint_ok;
        }
    }
    CHECK(endpoint_ok >= 18);  // >= 90% of seeds
    CHECK(rms[1] < rms[0]);
    CHECK(rms[2] < rms[1]);
}

TEST_CASE("reciprocity report arithmetic and validation") {
    const ReciprocityReport r1 = reciprocity_report(2.0, 0.5);
    CHECK(r1.product == 1.0);
    CHECK(r1.deviation == 0.0);
    const ReciprocityReport r2 = reciprocity_report(1.8, 0.5);
    CHECK(r2.product == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(r2.deviation == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(reciprocity_report(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(reciprocity_report(2.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(reciprocity_report(std::nan(""), 0.5), std::domain_error);
}

TEST_CASE("end-to-end reciprocity on one simulated corpus") {
    ZipfParams p(2.0);
    RandomStream s = RandomStream::derive(42, 0);
    ZipfSampler sampler(p);
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    // growth curve and counts from the same pass
    std::vector<GrowthPoint> pts;
    const auto cps = geometric_checkpoints(1000000);
    std::size_t next = 0;
    std::uint64_t distinct = 0;
    for (std::uint64_t m = 1; m <= 1000000; ++m) {
        auto [it, inserted] = counts.try_emplace(sampler(s), 0);
        ++it->second;
        if (inserted) ++distinct;
        if (next < cps.size() && m == cps[next]) {
            pts.push_back({m, distinct});
            ++next;
        }
    }
    const FitResult beta = fit_heaps(curve_of(std::move(pts)), 1000);
    const FitResult alpha = fit_zipf_alpha(table_from_counts(counts));
    const ReciprocityReport rep = reciprocity_report(alpha.exponent, beta.exponent);
    CHECK(rep.deviation <= 0.1);
}
