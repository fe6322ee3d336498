#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "zipfheaps/special_functions.hpp"

using zipfheaps::log_gamma;
using zipfheaps::zeta;
using zipfheaps::zeta_tail;

namespace {

// Independent oracle: long double partial sum with the integral tail bracket
//   sum_{i<=M} i^-a + (M+1)^(1-a)/(a-1) <= zeta(a) <= sum_{i<=M} i^-a + M^(1-a)/(a-1).
struct ZetaBracket {
    double lo, hi;
};

ZetaBracket zeta_bracket_oracle(double alpha, long long terms) {
    long double sum = 0.0L;
    for (long long i = terms; i >= 1; --i) {
        sum += std::pow(static_cast<long double>(i), -static_cast<long double>(alpha));
    }
    const long double am1 = static_cast<long double>(alpha) - 1.0L;
    const long double lo = sum + std::pow(static_cast<long double>(terms) + 1.0L, -am1) / am1;
    const long double hi = sum + std::pow(static_cast<long double>(terms), -am1) / am1;
    // widen by accumulated long double rounding
    const long double slop = 1e-17L * sum * static_cast<long double>(terms > 1000 ? 64 : 8);
    return {static_cast<double>(lo - slop), static_cast<double>(hi + slop)};
}

}  // namespace

TEST_CASE("zeta matches the partial-sum + tail-bracket oracle") {
    const ZetaBracket b2 = zeta_bracket_oracle(2.0, 2000000);
    CHECK(zeta(2.0) >= b2.lo);
    CHECK(zeta(2.0) <= b2.hi);
    const ZetaBracket b4 = zeta_bracket_oracle(4.0, 20000);
    CHECK(zeta(4.0) >= b4.lo);
    CHECK(zeta(4.0) <= b4.hi);
    const ZetaBracket b12 = zeta_bracket_oracle(1.2, 2000000);
    CHECK(zeta(1.2) >= b12.lo - 1e-9);  // bracket itself is ~5e-11 wide here
    CHECK(zeta(1.2) <= b12.hi + 1e-9);
}

TEST_CASE("zeta hits the classical values") {
    const double pi = 3.14159265358979323846;
    CHECK(zeta(2.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-12));
    CHECK(zeta(4.0) == doctest::Approx(pi * pi * pi * pi / 90.0).epsilon(1e-12));
}

TEST_CASE("zeta decreases in alpha and tends to 1") {
    double prev = zeta(1.01);
    for (double a : {1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0}) {
        const double z = zeta(a);
        CHECK(z < prev);
        CHECK(z > 1.0);
        prev = z;
    }
    CHECK(zeta(40.0) - 1.0 < 1e-11);
}

TEST_CASE("zeta rejects the divergent domain") {
    CHECK_THROWS_AS(zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(zeta(1.0 + 1e-10), std::domain_error);
    CHECK_THROWS_AS(zeta(0.5), std::domain_error);
    CHECK_THROWS_AS(zeta(-2.0), std::domain_error);
    CHECK_NOTHROW(zeta(1.0 + 1e-8));
}

TEST_CASE("zeta bracketing invariant holds for every truncation point") {
    for (double a : {1.2, 1.5, 2.0, 3.0, 6.0}) {
        const double z = zeta(a);
        for (long long m : {2LL, 10LL, 100LL, 1000LL}) {
            double partial = 0.0;
            for (long long i = 1; i <= m; ++i) {
                partial += std::pow(static_cast<double>(i), -a);
            }
            const double lo = partial + std::pow(static_cast<double>(m) + 1.0, 1.0 - a) / (a - 1.0);
            const double hi = partial + std::pow(static_cast<double>(m), 1.0 - a) / (a - 1.0);
            CHECK(z >= lo - 1e-12 * z);
            CHECK(z <= hi + 1e-12 * z);
        }
    }
}

TEST_CASE("zeta_tail completes the partial sum") {
    for (double s : {1.2, 2.0, 3.7, 11.0}) {
        for (double from : {8.0, 24.0, 100.0}) {
            double partial = 0.0;
            for (double i = 1.0; i < from; ++i) {
                partial += std::pow(i, -s);
            }
            CHECK(partial + zeta_tail(s, from) ==
                  doctest::Approx(zeta(s)).epsilon(1e-13));
        }
    }
}

namespace {

// Gamma-limit oracle: Gamma(x) = lim n^x n! / (x (x+1) ... (x+n)), evaluated
// in log space at n and 2n and Richardson-extrapolated (the error is c/n).
double log_gamma_limit_oracle(double x, long long n) {
    auto log_gn = [x](long long nn) {
        long double acc = static_cast<long double>(x) * std::log(static_cast<long double>(nn));
        for (long long k = 1; k <= nn; ++k) {
            acc += std::log(static_cast<long double>(k));
            acc -= std::log(static_cast<long double>(x) + static_cast<long double>(k));
        }
        acc -= std::log(static_cast<long double>(x));
        return acc;
    };
    const long double g1 = log_gn(n);
    const long double g2 = log_gn(2 * n);
    return static_cast<double>(2.0L * g2 - g1);
}

}  // namespace

TEST_CASE("log_gamma agrees with the Gamma-limit oracle at 1/2") {
    const double oracle = log_gamma_limit_oracle(0.5, 1 << 20);
    CHECK(log_gamma(0.5) == doctest::Approx(oracle).epsilon(5e-10));
    // and the frozen value ln sqrt(pi)
    CHECK(log_gamma(0.5) == doctest::Approx(0.57236494292470009).epsilon(1e-12));
}

TEST_CASE("log_gamma is zero at 1 and 2") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-13);
    CHECK(std::abs(log_gamma(2.0)) < 1e-13);
}

TEST_CASE("Gamma recurrence holds to 1e-10 across [0.1, 10]") {
    for (double x = 0.1; x <= 10.0; x += 0.0625) {
        const double lhs = std::exp(log_gamma(x + 1.0));
        const double rhs = x * std::exp(log_gamma(x));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("log_gamma rejects nonpositive arguments") {
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}
