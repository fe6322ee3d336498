#include "zipfheaps/zipf.hpp"

#include <cmath>
#include <stdexcept>

#include "zipfheaps/special_functions.hpp"

namespace zipfheaps {

ZipfParams::ZipfParams(double alpha) : alpha_(alpha), zeta_alpha_(zeta(alpha)) {}

double pmf(const ZipfParams& params, std::uint64_t rank) {
    if (rank == 0) {
        throw std::domain_error("pmf: rank must be >= 1");
    }
    return std::pow(static_cast<double>(rank), -params.alpha()) / params.zeta_alpha();
}

TailMassBounds tail_mass_bounds(const ZipfParams& params, std::uint64_t M) {
    if (M == 0) {
        throw std::domain_error("tail_mass_bounds: M must be >= 1");
    }
    const double am1 = params.alpha() - 1.0;
    const double denom = am1 * params.zeta_alpha();
    const double m = static_cast<double>(M);
    return TailMassBounds{std::pow(m + 1.0, -am1) / denom, std::pow(m, -am1) / denom};
}

// Rejection-inversion after Hormann & Derflinger (the scheme behind Apache
// Commons' bounded sampler), run on the full support: with alpha > 1 the
// envelope integral H converges, so the uniform draw ranges up to
// sup H = 1/(alpha-1) instead of H(N + 1/2). Acceptance regions have width
// exactly h(k) in H-space, which makes the sampler exact for p_k ~ k^-alpha.

namespace {

// (e^x - 1) / x, stable near 0.
double expm1_over_x(double x) {
    if (std::abs(x) > 1e-8) {
        return std::expm1(x) / x;
    }
    return 1.0 + x * 0.5 * (1.0 + x / 3.0 * (1.0 + 0.25 * x));
}

// log1p(x) / x, stable near 0.
double log1p_over_x(double x) {
    if (std::abs(x) > 1e-8) {
        return std::log1p(x) / x;
    }
    return 1.0 - x * (0.5 - x * (1.0 / 3.0 - 0.25 * x));
}

}  // namespace

double ZipfSampler::envelope(double x) const { return std::exp(-alpha_ * std::log(x)); }

double ZipfSampler::envelope_integral(double x) const {
    // H(x) = (x^(1-alpha) - 1) / (1 - alpha)
    const double log_x = std::log(x);
    return expm1_over_x((1.0 - alpha_) * log_x) * log_x;
}

double ZipfSampler::envelope_integral_inverse(double u) const {
    double t = u * (1.0 - alpha_);
    if (t < -1.0) {
        t = -1.0;  // u at (or just past) sup H: maps to x = inf
    }
    return std::exp(log1p_over_x(t) * u);
}

ZipfSampler::ZipfSampler(const ZipfParams& params) : alpha_(params.alpha()) {
    h_integral_x1_ = envelope_integral(1.5) - 1.0;
    h_integral_sup_ = 1.0 / (alpha_ - 1.0);
    s_ = 2.0 - envelope_integral_inverse(envelope_integral(2.5) - envelope(2.0));
}

std::uint64_t ZipfSampler::operator()(RandomStream& stream) const {
    for (;;) {
        const double u =
            h_integral_x1_ + stream.uniform01() * (h_integral_sup_ - h_integral_x1_);
        const double x = envelope_integral_inverse(u);
        if (!(x < 9.0e18)) {
            continue;  // beyond the rank type; probability ~ 1e-19 per draw
        }
        std::uint64_t k = static_cast<std::uint64_t>(x + 0.5);
        if (k < 1) {
            k = 1;
        }
        if (static_cast<double>(k) - x <= s_ ||
            u >= envelope_integral(static_cast<double>(k) + 0.5) -
                     envelope(static_cast<double>(k))) {
            return k;
        }
    }
}

std::uint64_t sample_rank(const ZipfParams& params, RandomStream& stream) {
    return ZipfSampler(params)(stream);
}

std::vector<std::uint64_t> sample_text(const ZipfParams& params, std::uint64_t n,
                                       RandomStream& stream) {
    ZipfSampler sampler(params);
    std::vector<std::uint64_t> text;
    text.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        text.push_back(sampler(stream));
    }
    return text;
}

}  // namespace zipfheaps
