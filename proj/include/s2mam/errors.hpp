#pragma once

#include <stdexcept>
#include <string>

namespace s2mam {

/// Bad user input: malformed files, inconsistent dimensions, invalid settings.
/// CLI maps this family to exit code 1.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// CSV/JSON content that cannot be parsed; carries a location in the message.
class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& msg) : ValidationError(msg) {}
};

/// Numerical breakdown (divergence, singular systems). CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace s2mam
