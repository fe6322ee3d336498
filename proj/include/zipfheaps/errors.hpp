#pragma once

#include <stdexcept>
#include <string>

namespace zipfheaps {

// Thrown when an iterative evaluation cannot reach the requested accuracy.
// Carries the best value obtained so far together with its error estimate,
// so callers can still report something useful.
class numerical_error : public std::runtime_error {
public:
    numerical_error(const std::string& msg, double best_value, double error_estimate)
        : std::runtime_error(msg), best_value_(best_value), error_estimate_(error_estimate) {}

    double best_value() const noexcept { return best_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_value_;
    double error_estimate_;
};

}  // namespace zipfheaps
