#ifndef BNSL_ERRORS_HPP
#define BNSL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnsl {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input files, flags or schemas. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// Failures while computing on well-formed input. The CLI maps these to exit code 3.
class ComputationError : public Error {
public:
    using Error::Error;
};

class CyclicResult : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class InvalidMove : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class DimensionMismatch : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class TooLarge : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class ConfigOverflow : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class IndexOutOfRange : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class InvalidPrior : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class EmptyData : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class OutOfRange : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NotApplicable : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public InputError {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& expected)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": expected " + expected),
          line_(line), column_(column), expected_(expected) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

class SemanticError : public InputError {
public:
    using InputError::InputError;
};

class MissingCell : public InputError {
public:
    using InputError::InputError;
};

class UnknownLevel : public InputError {
public:
    using InputError::InputError;
};

class HeaderMismatch : public InputError {
public:
    using InputError::InputError;
};

class SchemaMismatch : public InputError {
public:
    using InputError::InputError;
};

}  // namespace bnsl

#endif  // BNSL_ERRORS_HPP
