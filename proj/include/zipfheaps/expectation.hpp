#pragma once

#include <cstdint>

#include "zipfheaps/zipf.hpp"

namespace zipfheaps {

enum class Method {
    ExactSeries,
    Integral0,
    Integral1,
    ClosedForm,
    Asymptotic,
};

const char* method_name(Method m) noexcept;

struct ExpectationResult {
    double value = 0.0;
    double abs_error_bound = 0.0;  // +inf where no rigorous bound is claimed
    Method method = Method::ExactSeries;
};

// E X(n) = sum_{i>=1} [1 - (1 - p_i)^n], the expected number of distinct
// ranks among n i.i.d. draws, to absolute accuracy eps.
//
// The series is summed up to M = smallest power of two whose certified tail
// bound fits in eps/2: either the whole tail is below eps/2 (it is at most
// n * tail_mass upper bound) and gets dropped, or n*p_M <= 1/2 and the tail
// is evaluated through its binomial expansion sum_j (-1)^(j+1) C(n,j) Z_j
// with Z_j = sum_{i>M} p_i^j via zeta_tail, whose truncation is bounded by
// the first omitted term. Terms use -expm1(n*log1p(-p)), which keeps
// precision for p near 0 with n huge.
//
// Throws std::domain_error for eps <= 0 and numerical_error when no M within
// the budget certifies eps (eps unreachably small for the magnitude).
ExpectationResult exact_expected_distinct(const ZipfParams& params, std::uint64_t n,
                                          double eps);

enum class LowerLimit {
    FromZero,
    FromOne,
};

// Numerical value of integral_a^inf [1 - (1 - 1/(zeta x^alpha))^n] dx with
// a = 0 or 1. For FromZero the integrand is clamped to 1 wherever
// zeta * x^alpha <= 1 (there the formal expression says the word is certain),
// so the piece [0, zeta^(-1/alpha)] contributes its length exactly.
// By monotonicity of the term function, FromOne <= exact series <= FromZero.
ExpectationResult integral_expected_distinct(const ZipfParams& params, std::uint64_t n,
                                             LowerLimit lower);

// Exact value of integral_1^inf [1 - (1 - y^(-alpha))^n] dy, obtained from
// the binomial expansion and the alternating-sum identity:
//   -1 - (1/alpha) * n! / prod_{k=0..n} (k - 1/alpha),
// evaluated in log space through log_gamma (the product telescopes into
// Gamma ratios, with the single negative factor at k = 0 tracked by sign).
// Throws std::domain_error when 1/alpha is within 1e-9 of an integer in
// [0, n] (pole guard).
double closed_form_tail_integral(double alpha, std::uint64_t n);

enum class IdentityForm {
    Sum,
    Product,
};

// Both sides of  sum_{i=0..n} C(n,i) (-1)^i / (i + x) = n! / (x (x+1) ... (x+n)).
// Sum evaluates the alternating series directly (long double accumulation;
// still catastrophically cancelling for n beyond ~10^3, so it is meant for
// cross-checks at small n). Product evaluates the right side in sign-tracked
// log space and is stable for any n. Throws std::domain_error when x is
// within 1e-9 of one of the poles 0, -1, ..., -n.
double alternating_identity(std::uint64_t n, double x, IdentityForm form);

// Gamma(1 - 1/alpha) * (n / zeta(alpha))^(1/alpha): the leading term of
// E X(n) for large n, with the explicit constant. The exact/asymptotic ratio
// tends to 1, which is the Heaps-law exponent statement beta = 1/alpha.
// No rigorous error bound is claimed (abs_error_bound = +inf for n >= 1).
ExpectationResult asymptotic_expected_distinct(const ZipfParams& params, std::uint64_t n);

}  // namespace zipfheaps
