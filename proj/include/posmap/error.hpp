#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posmap {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

/// Operand shapes disagree (variable counts, vector lengths, matrix sizes).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An argument violates an operation's precondition (zero polynomial where a
/// nonzero one is required, non-homogeneous input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A self-check failed. Never expected on valid input.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Text or JSON input could not be parsed. Line and column are 1-based; 0
/// means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"
                     : what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace posmap
