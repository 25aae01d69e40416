#pragma once

#include <stdexcept>
#include <string>

namespace hsr {

/// Precondition violated: vertex out of range, malformed spec, n too small.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A guard on exponential work tripped (ground set or model count too large).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text could not be parsed or does not describe a valid object.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & what, std::size_t line = 0, std::size_t offset = 0) :
        std::runtime_error(what), line_(line), offset_(offset)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

/// A proved property failed on a concrete instance. Never expected to fire.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hsr
