#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cyq {

// Exit-code classes surfaced by the CLI: validation 1, resource 2, internal 3.

class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    explicit ValidationError(const std::string& what) : ValidationError("validation", what) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Operands or inputs that live over different / incompatible quivers.
class StructuralError : public ValidationError {
public:
    explicit StructuralError(const std::string& what) : ValidationError("structural", what) {}
};

class UnsupportedInput : public ValidationError {
public:
    explicit UnsupportedInput(const std::string& what) : ValidationError("unsupported", what) {}
};

// No positive weight grading makes the differential homogeneous.
class WeightGradingError : public ValidationError {
public:
    WeightGradingError(const std::string& what, std::vector<std::string> constraints)
        : ValidationError("no-weight-grading", what), constraints_(std::move(constraints)) {}

    const std::vector<std::string>& constraints() const noexcept { return constraints_; }

private:
    std::vector<std::string> constraints_;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a certified construction fails its own invariant (a bug).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cyq
