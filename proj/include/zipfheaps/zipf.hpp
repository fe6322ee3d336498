#pragma once

#include <cstdint>
#include <vector>

#include "zipfheaps/random_stream.hpp"

namespace zipfheaps {

// Rank distribution p_i = i^(-alpha) / zeta(alpha) over i = 1, 2, ...
// (infinite support). Immutable; the normalizer is computed once at
// construction and cached because every pmf evaluation divides by it.
class ZipfParams {
public:
    explicit ZipfParams(double alpha);  // throws std::domain_error unless alpha > 1 + 1e-9

    double alpha() const noexcept { return alpha_; }
    double zeta_alpha() const noexcept { return zeta_alpha_; }

private:
    double alpha_;
    double zeta_alpha_;
};

// p_rank, strictly decreasing in rank. Throws std::domain_error for rank 0.
double pmf(const ZipfParams& params, std::uint64_t rank);

struct TailMassBounds {
    double lower;
    double upper;
};

// Bracket for sum_{i > M} p_i from the integral comparison:
//   (M+1)^(1-a) / ((a-1) zeta(a))  <=  tail  <=  M^(1-a) / ((a-1) zeta(a)).
TailMassBounds tail_mass_bounds(const ZipfParams& params, std::uint64_t M);

// Exact sampler over the full unbounded rank support: rejection-inversion
// with a flat-top envelope over the monotone pmf (Hormann & Derflinger).
// No vocabulary cap, so distinct counts are unbiased at any text length.
class ZipfSampler {
public:
    explicit ZipfSampler(const ZipfParams& params);

    std::uint64_t operator()(RandomStream& stream) const;

private:
    double envelope_integral(double x) const;          // H(x) = (x^(1-a) - 1) / (1 - a)
    double envelope_integral_inverse(double u) const;  // H^-1
    double envelope(double x) const;                   // h(x) = x^(-a)

    double alpha_;
    double h_integral_x1_;   // H(1.5) - h(1), lower end of the uniform range
    double h_integral_sup_;  // lim_{x->inf} H(x) = 1/(alpha - 1)
    double s_;               // flat-top acceptance cutoff
};

// One draw. Convenience wrapper that builds the sampler per call; loops
// should construct a ZipfSampler once instead.
std::uint64_t sample_rank(const ZipfParams& params, RandomStream& stream);

// n i.i.d. draws.
std::vector<std::uint64_t> sample_text(const ZipfParams& params, std::uint64_t n,
                                       RandomStream& stream);

}  // namespace zipfheaps
