#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace floodit {

// Base of every error the library raises. The C API maps each subclass to a
// distinct status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad caller input: out-of-range vertex, disconnected graph, oversized
// terminal set and so on.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// The instance is larger than a fixed-capacity structure supports.
class CapacityError : public Error {
public:
    using Error::Error;
};

// A configured budget (visited states, subgraph count, wall clock) ran out.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A broken internal invariant. Never expected on valid input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace floodit
