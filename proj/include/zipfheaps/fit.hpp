#pragma once

#include <cstdint>

#include "zipfheaps/corpus.hpp"
#include "zipfheaps/simulate.hpp"

namespace zipfheaps {

struct FitResult {
    double exponent = 0.0;
    double log_intercept = 0.0;
    double residual_rms = 0.0;
    std::uint64_t points_used = 0;
};

// Least-squares line through (ln m, ln d) over points with m >= min_m and
// d >= 1; exponent is the slope (the Heaps beta). The small-m transient is
// not power-law, hence the cutoff (CLI default 1000). Throws
// std::domain_error with fewer than two qualifying points.
FitResult fit_heaps(const GrowthCurve& curve, std::uint64_t min_m);

// Maximum-likelihood alpha for the infinite-support law p_i = i^(-a)/zeta(a):
// maximizes l(a) = -a * sum_j c_j ln r_j - N ln zeta(a) by bracketed search
// on (1 + 1e-6, 20], solving E_a[ln rank] = mean observed log-rank with
// -zeta'/zeta from central differences of ln zeta. If the data's mean
// log-rank lies outside the bracket's range the nearer edge is returned.
//
// Log-log regression on rank-frequency is known-biased, so it is kept only
// as a diagnostic: log_intercept is the model's predicted log count at rank 1
// and residual_rms the RMS log-count residual against the fitted model.
// Throws std::domain_error for tables with fewer than two distinct tokens
// (alpha unidentifiable) or fewer than two total counts.
FitResult fit_zipf_alpha(const RankFrequency& table);

struct ReciprocityReport {
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    double product = 0.0;    // alpha_hat * beta_hat
    double deviation = 0.0;  // |product - 1|
};

// Pure arithmetic on the two fitted exponents; the Zipf and Heaps exponents
// are reciprocal under the model, so product ~ 1. Throws std::domain_error
// unless both inputs are finite and positive.
ReciprocityReport reciprocity_report(double alpha_hat, double beta_hat);

}  // namespace zipfheaps
