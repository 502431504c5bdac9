#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistcode {

/// Malformed input text. Carries the 1-based line number where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a precondition (shape, degree, parameter range).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// The requested quantity is undefined or not computable for this input
/// (distance of the zero code, brute-force cap exceeded, exhausted retries).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace twistcode
