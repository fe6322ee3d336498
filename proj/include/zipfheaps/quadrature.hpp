#pragma once

#include <functional>

namespace zipfheaps {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // absolute
};

// Adaptive Gauss-Kronrod 7/15 on a finite interval [a, b]. Splits the worst
// panel until the summed error estimate drops below max(tol, machine floor).
// Throws numerical_error (best value attached) when the panel budget runs out
// before that happens.
QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b, double tol);

// Integral of f over [a, inf), a > 0, for continuous monotone-decreasing
// integrands. The interval is mapped to (0, 1] via x = a/t and integrated
// adaptively; integrable endpoint behaviour of the transformed integrand is
// resolved by subdivision toward t = 0. Error contract as integrate_finite.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double a, double tol);

}  // namespace zipfheaps
