#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "zipfheaps/errors.hpp"
#include "zipfheaps/quadrature.hpp"

using zipfheaps::integrate_finite;
using zipfheaps::integrate_semi_infinite;
using zipfheaps::numerical_error;
using zipfheaps::QuadratureResult;

TEST_CASE("semi-infinite integrals of inverse powers") {
    // antiderivative oracles: -1/y and -2 y^{-1/2}
    auto r1 = integrate_semi_infinite([](double y) { return 1.0 / (y * y); }, 1.0, 1e-12);
    CHECK(std::abs(r1.value - 1.0) <= std::max(1e-12, r1.error_estimate));

    auto r2 = integrate_semi_infinite([](double y) { return std::pow(y, -1.5); }, 1.0, 1e-12);
    CHECK(std::abs(r2.value - 2.0) <= std::max(1e-12, r2.error_estimate));
}

TEST_CASE("termwise-antiderivative oracle: 1 - (1 - y^-2)^2") {
    // expand to 2 y^-2 - y^-4 and integrate termwise: 2 - 1/3
    const double expected = 2.0 - 1.0 / 3.0;
    auto r = integrate_semi_infinite(
        [](double y) {
            const double u = 1.0 - 1.0 / (y * y);
            return 1.0 - u * u;
        },
        1.0, 1e-12);
    CHECK(std::abs(r.value - expected) <= std::max(1e-12, r.error_estimate) + 1e-13);
}

TEST_CASE("error estimates are nonnegative and values finite") {
    auto r = integrate_semi_infinite([](double y) { return std::pow(y, -1.2); }, 2.0, 1e-10);
    CHECK(r.error_estimate >= 0.0);
    CHECK(std::isfinite(r.value));
    // oracle: integral_2^inf y^-1.2 = 2^-0.2 / 0.2
    CHECK(r.value == doctest::Approx(std::pow(2.0, -0.2) / 0.2).epsilon(1e-9));
}

TEST_CASE("linearity within combined error estimates") {
    auto f = [](double y) { return std::pow(y, -1.5); };
    const double c = 0.37;
    auto rf = integrate_semi_infinite(f, 1.0, 1e-11);
    auto rcf = integrate_semi_infinite([f, c](double y) { return c * f(y); }, 1.0, 1e-11);
    CHECK(std::abs(rcf.value - c * rf.value) <=
          rcf.error_estimate + c * rf.error_estimate + 1e-13);
}

TEST_CASE("finite-interval integrator handles plain polynomials exactly") {
    auto r = integrate_finite([](double x) { return x * x; }, 0.0, 3.0, 1e-13);
    CHECK(r.value == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("a divergent integrand exhausts the budget and reports best effort") {
    try {
        integrate_finite([](double t) { return 1.0 / t; }, 0.0, 1.0, 1e-10);
        FAIL("expected numerical_error");
    } catch (const numerical_error& e) {
        CHECK(std::isfinite(e.best_value()));
        CHECK(e.error_estimate() > 0.0);
    }
}

TEST_CASE("domain validation") {
    auto f = [](double) { return 0.0; };
    CHECK_THROWS_AS(integrate_semi_infinite(f, 0.0, 1e-9), std::domain_error);
    CHECK_THROWS_AS(integrate_semi_infinite(f, -1.0, 1e-9), std::domain_error);
    CHECK_THROWS_AS(integrate_semi_infinite(f, 1.0, -1e-9), std::domain_error);
    CHECK_THROWS_AS(integrate_finite(f, 1.0, 1.0, 1e-9), std::domain_error);
}
