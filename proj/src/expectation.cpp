#include "zipfheaps/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "zipfheaps/errors.hpp"
#include "zipfheaps/quadrature.hpp"
#include "zipfheaps/special_functions.hpp"

namespace zipfheaps {

const char* method_name(Method m) noexcept {
    switch (m) {
        case Method::ExactSeries: return "ExactSeries";
        case Method::Integral0: return "Integral0";
        case Method::Integral1: return "Integral1";
        case Method::ClosedForm: return "ClosedForm";
        case Method::Asymptotic: return "Asymptotic";
    }
    return "?";
}

namespace {

// 1 - (1-q)^n for q in (0,1], exact at q = 1 and accurate for tiny q with n
// huge. 1-q is exact by Sterbenz for q in [0.5, 1], so log1p(-q) is safe on
// the whole range.
inline double one_minus_pow(double q, double n) {
    return -std::expm1(n * std::log1p(-q));
}

}  // namespace

ExpectationResult asymptotic_expected_distinct(const ZipfParams& params, std::uint64_t n) {
    if (n == 0) {
        return {0.0, 0.0, Method::Asymptotic};
    }
    const double inv_alpha = 1.0 / params.alpha();
    const double value =
        std::exp(log_gamma(1.0 - inv_alpha) +
                 inv_alpha * (std::log(static_cast<double>(n)) - std::log(params.zeta_alpha())));
    return {value, std::numeric_limits<double>::infinity(), Method::Asymptotic};
}

ExpectationResult exact_expected_distinct(const ZipfParams& params, std::uint64_t n,
                                          double eps) {
    if (!(eps > 0.0)) {
        throw std::domain_error("exact_expected_distinct: requires eps > 0");
    }
    if (n == 0) {
        return {0.0, 0.0, Method::ExactSeries};
    }

    const double alpha = params.alpha();
    const double z = params.zeta_alpha();
    const double nd = static_cast<double>(n);
    const double rough = asymptotic_expected_distinct(params, n).value;

    // Truncation point: smallest power of two that certifies a tail bound
    // within eps/2. Two certificates are tried at each M:
    //  - Drop: the whole tail is below eps/2, since each term is < n p_i
    //    (footnote bound) and sum_{i>M} p_i has a closed upper bound.
    //  - Binomial: once n p_M <= 1/2 the tail's binomial expansion
    //    sum_j (-1)^(j+1) C(n,j) sum_{i>M} p_i^j converges with ratio < 1/2
    //    per term, each inner sum is a zeta_tail, and the whole tail is
    //    evaluated to near machine accuracy (needs eps above the double floor
    //    for the result's magnitude).
    enum class TailMode { Drop, Binomial };
    constexpr int kMinLog = 4;
    constexpr int kMinLogBinomial = 6;  // zeta_tail wants a reasonable lower limit
    constexpr int kMaxLog = 26;

    TailMode mode = TailMode::Drop;
    std::uint64_t trunc = 0;
    for (int k = kMinLog; k <= kMaxLog; ++k) {
        const std::uint64_t candidate = 1ull << k;
        if (nd * tail_mass_bounds(params, candidate).upper <= 0.5 * eps) {
            mode = TailMode::Drop;
            trunc = candidate;
            break;
        }
        if (k >= kMinLogBinomial && nd * pmf(params, candidate) <= 0.5 &&
            1e-14 * std::max(1.0, rough) <= 0.5 * eps) {
            mode = TailMode::Binomial;
            trunc = candidate;
            break;
        }
    }
    if (trunc == 0) {
        throw numerical_error(
            "exact_expected_distinct: eps unreachably small for this alpha/n "
            "(no truncation point within budget certifies it)",
            rough, std::numeric_limits<double>::infinity());
    }

    // Partial sum over i <= M, compensated.
    double sum = 0.0;
    double comp = 0.0;
    for (std::uint64_t i = 1; i <= trunc; ++i) {
        const double q = std::pow(static_cast<double>(i), -alpha) / z;
        const double term = one_minus_pow(q, nd);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    double tail = 0.0;
    double tail_bound = 0.0;
    if (mode == TailMode::Drop) {
        tail_bound = nd * tail_mass_bounds(params, trunc).upper;
    } else {
        const double from = static_cast<double>(trunc) + 1.0;
        double z_prev = zeta_tail(alpha, from) / z;  // Z_1 = sum_{i>M} p_i
        double term = nd * z_prev;                   // t_1 = C(n,1) Z_1
        double signed_sum = term;
        double abs_sum = std::abs(term);
        int j = 1;
        constexpr int kMaxJ = 400;
        while (std::abs(term) > 1e-17 * std::max(abs_sum, 1e-300) && j < kMaxJ) {
            ++j;
            const double zj =
                zeta_tail(alpha * static_cast<double>(j), from) / std::pow(z, static_cast<double>(j));
            if (!(zj > 0.0) || !(z_prev > 0.0)) {
                term = 0.0;  // inner sums underflowed; remainder is negligible
                break;
            }
            const double ratio =
                ((nd - static_cast<double>(j - 1)) / static_cast<double>(j)) * (zj / z_prev);
            term = -term * ratio;  // C(n,j) vanishes for j > n, ending the series
            signed_sum += term;
            abs_sum += std::abs(term);
            z_prev = zj;
        }
        tail = signed_sum;
        tail_bound = 2.0 * std::abs(term) + 1e-14 * abs_sum;
    }

    const double slop = 1e-15 * (std::abs(sum) + std::abs(tail) + 1.0);
    const double bound = tail_bound + slop;
    double value = sum + tail;
    value = std::min(std::max(value, 0.0), nd);  // at most n distinct words in n tokens
    if (!(bound <= eps)) {
        throw numerical_error("exact_expected_distinct: certified bound exceeds eps", value,
                              bound);
    }
    return {value, bound, Method::ExactSeries};
}

ExpectationResult integral_expected_distinct(const ZipfParams& params, std::uint64_t n,
                                             LowerLimit lower) {
    if (n == 0) {
        throw std::domain_error("integral_expected_distinct: requires n >= 1");
    }
    const double alpha = params.alpha();
    const double z = params.zeta_alpha();
    const double nd = static_cast<double>(n);

    auto term = [alpha, z, nd](double x) {
        const double q = std::pow(x, -alpha) / z;
        if (q >= 1.0) return 1.0;  // zeta x^alpha <= 1: the word is certain
        return one_minus_pow(q, nd);
    };

    const double tol = 1e-10 * std::max(1.0, asymptotic_expected_distinct(params, n).value);
    const QuadratureResult from_one = integrate_semi_infinite(term, 1.0, tol);
    if (lower == LowerLimit::FromOne) {
        return {from_one.value, from_one.error_estimate, Method::Integral1};
    }

    // [0, x0] contributes its length exactly (integrand clamped to 1 there).
    const double x0 = std::pow(z, -1.0 / alpha);
    QuadratureResult mid{0.0, 0.0};
    if (x0 < 1.0) {
        mid = integrate_finite(term, x0, 1.0, tol);
    }
    return {x0 + mid.value + from_one.value, mid.error_estimate + from_one.error_estimate,
            Method::Integral0};
}

double closed_form_tail_integral(double alpha, std::uint64_t n) {
    if (!(alpha > 1.0 + 1e-9)) {
        throw std::domain_error("closed_form_tail_integral: requires alpha > 1");
    }
    if (n == 0) {
        throw std::domain_error("closed_form_tail_integral: requires n >= 1");
    }
    const double x = 1.0 / alpha;
    const double nearest = std::round(x);
    if (std::abs(x - nearest) < 1e-9 && nearest >= 0.0 &&
        nearest <= static_cast<double>(n)) {
        throw std::domain_error("closed_form_tail_integral: 1/alpha within 1e-9 of a pole");
    }
    // -1 - (1/alpha) n! / prod_{k=0..n}(k - x); the product is
    // -x Gamma(n+1-x)/Gamma(1-x), so everything telescopes into Gamma ratios
    // and the x factors cancel:
    const double nd = static_cast<double>(n);
    return std::expm1(log_gamma(nd + 1.0) + log_gamma(1.0 - x) - log_gamma(nd + 1.0 - x));
}

double alternating_identity(std::uint64_t n, double x, IdentityForm form) {
    if (n == 0) {
        throw std::domain_error("alternating_identity: requires n >= 1");
    }
    const double nearest = std::round(x);
    if (std::abs(x - nearest) < 1e-9 && nearest <= 0.0 &&
        nearest >= -static_cast<double>(n)) {
        throw std::domain_error("alternating_identity: x within 1e-9 of a pole");
    }
    if (form == IdentityForm::Sum) {
        // Direct alternating sum; long double keeps term rounding below the
        // cancellation the sum itself causes. Still loses digits fast as n
        // grows; meant for small-n cross-checks only.
        long double acc = 0.0L;
        long double binom = 1.0L;  // C(n, i)
        long double sign = 1.0L;
        const long double xl = static_cast<long double>(x);
        for (std::uint64_t i = 0; i <= n; ++i) {
            acc += sign * binom / (static_cast<long double>(i) + xl);
            sign = -sign;
            binom = binom * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
        }
        return static_cast<double>(acc);
    }
    // n! / (x (x+1) ... (x+n)), sign tracked, magnitudes in log space.
    double log_den = 0.0;
    int sign = 1;
    for (std::uint64_t k = 0; k <= n; ++k) {
        const double factor = x + static_cast<double>(k);
        if (factor < 0.0) sign = -sign;
        log_den += std::log(std::abs(factor));
    }
    const double magnitude = std::exp(log_gamma(static_cast<double>(n) + 1.0) - log_den);
    return sign > 0 ? magnitude : -magnitude;
}

}  // namespace zipfheaps
