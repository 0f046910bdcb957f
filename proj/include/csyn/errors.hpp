// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csyn {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the QASM frontend. Carries the 1-based source line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class UnsupportedGate : public ParseError {
public:
    using ParseError::ParseError;
};

class QubitIndexError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Empty or over-capacity input to a layout step.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

class IOError : public Error {
public:
    using Error::Error;
};

/// Malformed topology or report file.
class FormatError : public Error {
public:
    using Error::Error;
};

class UnknownTopology : public Error {
public:
    using Error::Error;
};

class CapacityError : public Error {
public:
    using Error::Error;
};

class UnroutableGate : public Error {
public:
    using Error::Error;
};

}  // namespace csyn
