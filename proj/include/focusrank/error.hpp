#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace focusrank {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments violate an operation's precondition (bad config, empty input, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t found, const std::string &where)
        : Error(where + ": dimension mismatch (expected " + std::to_string(expected) + ", found "
                + std::to_string(found) + ")"),
          expected(expected), found(found) {}

    std::size_t expected;
    std::size_t found;
};

class ZeroNormVector : public Error {
public:
    using Error::Error;
};

class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// Malformed input file. `line` is 1-based, 0 when not tied to a line.
class FormatError : public Error {
public:
    FormatError(const std::string &what, std::size_t line = 0) : Error(what), line(line) {}

    std::size_t line;
};

class CountMismatch : public Error {
public:
    CountMismatch(std::size_t expected, std::size_t found, const std::string &where)
        : Error(where + ": expected " + std::to_string(expected) + " vectors, found "
                + std::to_string(found)),
          expected(expected), found(found) {}

    std::size_t expected;
    std::size_t found;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace focusrank
