#pragma once

#include <stdexcept>
#include <string>

namespace wcount {

// Thrown when a brute-force enumeration would exceed its point budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exact integer product would not fit the 128-bit intermediate.
class ArithmeticOverflow : public std::overflow_error {
public:
    explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

// Thrown when adaptive quadrature cannot reach the requested tolerance.
// Carries the best estimate obtained so far.
class ToleranceNotMet : public std::runtime_error {
public:
    ToleranceNotMet(const std::string& what, double best_value, double best_error)
        : std::runtime_error(what), value(best_value), error_estimate(best_error) {}
    double value;
    double error_estimate;
};

// Thrown when a homogeneous form fails validation.
class InvalidForm : public std::invalid_argument {
public:
    explicit InvalidForm(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown for parameters outside the supported range (e.g. zeta exponent < 1).
class UnsupportedParameter : public std::domain_error {
public:
    explicit UnsupportedParameter(const std::string& what) : std::domain_error(what) {}
};

}  // namespace wcount
