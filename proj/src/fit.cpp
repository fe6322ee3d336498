#include "zipfheaps/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zipfheaps/special_functions.hpp"

namespace zipfheaps {

FitResult fit_heaps(const GrowthCurve& curve, std::uint64_t min_m) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const GrowthPoint& p : curve.points) {
        if (p.m >= min_m && p.d >= 1) {
            xs.push_back(std::log(static_cast<double>(p.m)));
            ys.push_back(std::log(static_cast<double>(p.d)));
        }
    }
    const std::size_t count = xs.size();
    if (count < 2) {
        throw std::domain_error("fit_heaps: fewer than 2 qualifying points (m >= min_m, d >= 1)");
    }

    double xbar = 0.0;
    double ybar = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= static_cast<double>(count);
    ybar /= static_cast<double>(count);

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    // m strictly increasing guarantees sxx > 0 with >= 2 points
    const double slope = sxy / sxx;
    const double intercept = ybar - slope * xbar;

    double rss = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        rss += r * r;
    }
    return FitResult{slope, intercept, std::sqrt(rss / static_cast<double>(count)), count};
}

namespace {

// E[ln rank] under Zipf(alpha), i.e. -zeta'(alpha)/zeta(alpha), by central
// difference of ln zeta. Strictly decreasing in alpha, which is what the
// bracketed MLE search relies on.
double expected_log_rank(double alpha) {
    double h = 1e-5;
    const double floor = 1.0 + 1e-9;
    if (alpha - h <= floor) {
        h = 0.5 * (alpha - floor);
    }
    return -(std::log(zeta(alpha + h)) - std::log(zeta(alpha - h))) / (2.0 * h);
}

}  // namespace

FitResult fit_zipf_alpha(const RankFrequency& table) {
    const std::size_t k = table.entries.size();
    if (k < 2) {
        throw std::domain_error(
            "fit_zipf_alpha: need at least 2 distinct tokens (alpha unidentifiable)");
    }
    double total = 0.0;
    double sum_log_rank = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        if (j > 0 && table.entries[j].count > table.entries[j - 1].count) {
            throw std::domain_error("fit_zipf_alpha: table must be sorted by descending count");
        }
        if (table.entries[j].count == 0) {
            throw std::domain_error("fit_zipf_alpha: zero counts are not allowed");
        }
        const double c = static_cast<double>(table.entries[j].count);
        total += c;
        sum_log_rank += c * std::log(static_cast<double>(j + 1));
    }
    if (total < 2.0) {
        throw std::domain_error("fit_zipf_alpha: need at least 2 tokens in total");
    }
    const double mean_log_rank = sum_log_rank / total;

    // dl/da = N (E_a[ln rank] - mean observed ln rank); E_a[ln rank] is
    // decreasing, so the likelihood is unimodal and bisection on the
    // derivative's sign finds the maximizer. Data outside the bracket's
    // range pins the estimate to the nearer edge.
    double lo = 1.0 + 1e-6;
    double hi = 20.0;
    double alpha_hat;
    if (mean_log_rank >= expected_log_rank(lo)) {
        alpha_hat = lo;
    } else if (mean_log_rank <= expected_log_rank(hi)) {
        alpha_hat = hi;
    } else {
        for (int it = 0; it < 100 && (hi - lo) > 1e-12 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (expected_log_rank(mid) > mean_log_rank) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        alpha_hat = 0.5 * (lo + hi);
    }

    // Diagnostics: residuals of observed log counts against the fitted
    // model's predicted log counts, ln(N p_r) = intercept - alpha ln r.
    const double intercept = std::log(total) - std::log(zeta(alpha_hat));
    double rss = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const double predicted =
            intercept - alpha_hat * std::log(static_cast<double>(j + 1));
        const double r = std::log(static_cast<double>(table.entries[j].count)) - predicted;
        rss += r * r;
    }
    return FitResult{alpha_hat, intercept, std::sqrt(rss / static_cast<double>(k)), k};
}

ReciprocityReport reciprocity_report(double alpha_hat, double beta_hat) {
    if (!(std::isfinite(alpha_hat) && alpha_hat > 0.0) ||
        !(std::isfinite(beta_hat) && beta_hat > 0.0)) {
        throw std::domain_error("reciprocity_report: exponents must be finite and positive");
    }
    const double product = alpha_hat * beta_hat;
    return ReciprocityReport{alpha_hat, beta_hat, product, std::abs(product - 1.0)};
}

}  // namespace zipfheaps
