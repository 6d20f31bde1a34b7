#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gramderiv {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Division by zero, negative powers of multi-term polynomials.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// 64-bit exponent arithmetic left its range.
class OverflowError : public Error {
public:
    OverflowError() : Error("exponent overflow") {}
};

// Argument outside the domain of an operation (e.g. n < 1 - r for n!_r).
class DomainError : public Error {
public:
    using Error::Error;
};

// Sub-grammar index outside 1..size.
class IndexError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position),
          message_(message) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

} // namespace gramderiv
