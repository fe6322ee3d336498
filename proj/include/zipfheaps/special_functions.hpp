#pragma once

namespace zipfheaps {

// Riemann zeta for real alpha > 1: truncated sum plus Euler-Maclaurin tail,
// relative error <= 1e-12 over the whole domain (the tail integral
// N^(1-alpha)/(alpha-1) carries the mass near alpha -> 1+, so certified
// digits stay cheap there). Throws std::domain_error for alpha <= 1 + 1e-9.
double zeta(double alpha);

// Tail sum_{i >= from} i^(-s) for s > 1 + 1e-9 and from >= 8, evaluated by
// the same Euler-Maclaurin expansion without summing any leading terms.
// zeta(s) == sum_{i < from} i^(-s) + zeta_tail(s, from).
double zeta_tail(double s, double from);

// ln Gamma(x) for x > 0 (Lanczos, g = 7, 9 coefficients; reflection below
// 0.5). Relative error <= 1e-12 away from the zeros at x = 1 and x = 2,
// absolute error ~1e-15 near them. Throws std::domain_error for x <= 0.
double log_gamma(double x);

}  // namespace zipfheaps
