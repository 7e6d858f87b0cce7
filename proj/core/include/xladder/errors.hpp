#pragma once

#include <stdexcept>
#include <string>

namespace xladder {

struct kernel_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : kernel_error {
    division_by_zero() : kernel_error("division by zero") {}
};

// Thrown when a numeric value of alpha annihilates a denominator factor.
struct degenerate_parameter : kernel_error {
    explicit degenerate_parameter(const std::string& factor)
        : kernel_error("degenerate parameter: " + factor), vanishing_factor(factor) {}
    std::string vanishing_factor;
};

struct evaluation_at_pole : kernel_error {
    evaluation_at_pole() : kernel_error("evaluation at pole") {}
};

struct ansatz_exhausted : kernel_error {
    explicit ansatz_exhausted(const std::string& stage)
        : kernel_error("ansatz degree bound exhausted at stage: " + stage), stage(stage) {}
    std::string stage;
};

struct no_quasi_rational_eigenstate : kernel_error {
    explicit no_quasi_rational_eigenstate(const std::string& weight)
        : kernel_error("no quasi-rational eigenstate at weight " + weight) {}
};

struct unsupported_anchor : kernel_error {
    unsupported_anchor() : kernel_error("multi-term anchor is unsupported") {}
};

} // namespace xladder
