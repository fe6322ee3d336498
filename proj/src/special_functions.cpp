#include "zipfheaps/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace zipfheaps {

namespace {

// B_{2j} / (2j)! for the Euler-Maclaurin correction terms.
constexpr double kBern[] = {
    8.3333333333333333e-02,   // B2/2!
    -1.3888888888888889e-03,  // B4/4!
    3.3068783068783069e-05,   // B6/6!
    -8.2671957671957672e-07,  // B8/8!
    2.0876756987868099e-08,   // B10/10!
    -5.2841901386874932e-10,  // B12/12!
    1.3382536530684679e-11,   // B14/14!
    -3.3896802963225829e-13,  // B16/16!
    8.5860620562778446e-15,   // B18/18!
    -2.1748686985580619e-16,  // B20/20!
};
constexpr int kBernTerms = sizeof(kBern) / sizeof(kBern[0]);

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln sqrt(2 pi)

}  // namespace

double zeta_tail(double s, double from) {
    // sum_{i>=N} i^-s = N^(1-s)/(s-1) + N^-s/2
    //                 + sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1).
    // For N >= 8 the correction terms fall well below 1e-15 of the total
    // before the asymptotic series turns.
    const double n = from;
    const double n_pow = std::pow(n, -s);  // may underflow to 0 for huge s: fine
    double sum = n_pow * (n / (s - 1.0) + 0.5);
    double rising = s;            // s (s+1) ... (s+2j-2)
    double power = n_pow / n;     // N^(-s-2j+1)
    for (int j = 0; j < kBernTerms; ++j) {
        const double delta = kBern[j] * rising * power;
        sum += delta;
        if (std::abs(delta) <= 0.25e-15 * std::abs(sum)) break;
        rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
        power /= n * n;
    }
    return sum;
}

double zeta(double alpha) {
    if (!(alpha > 1.0 + 1e-9)) {
        throw std::domain_error("zeta: requires alpha > 1 (the series diverges otherwise)");
    }
    const int cutoff = 24;
    double partial = 0.0;
    for (int i = cutoff - 1; i >= 1; --i) {  // ascending magnitude
        partial += std::pow(static_cast<double>(i), -alpha);
    }
    return partial + zeta_tail(alpha, static_cast<double>(cutoff));
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: requires x > 0");
    }
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
    }
    // Lanczos, g = 7 (Godfrey coefficients).
    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double z = x - 1.0;
    double series = c[0];
    for (int i = 1; i < 9; ++i) {
        series += c[i] / (z + i);
    }
    const double base = z + 7.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(base) - base + std::log(series);
}

}  // namespace zipfheaps
