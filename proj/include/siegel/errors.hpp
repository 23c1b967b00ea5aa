#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

// Error taxonomy shared across the library. Everything derives from
// std::runtime_error so callers can catch coarsely; the CLI maps
// ConfigError-like conditions to exit code 2 and assertion failures to 1.

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

struct PositivityViolation : std::runtime_error {
    explicit PositivityViolation(const std::string& what) : std::runtime_error(what) {}
};

struct ExactnessError : std::runtime_error {
    explicit ExactnessError(const std::string& what) : std::runtime_error(what) {}
};

struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotRepresentable : std::runtime_error {
    explicit NotRepresentable(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity the library is supposed to certify failed.
// The CLI maps this to exit code 1 (vs 2 for configuration errors).
struct AssertionFailure : std::runtime_error {
    explicit AssertionFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace siegel
