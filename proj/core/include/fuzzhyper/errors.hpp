#pragma once

#include <stdexcept>
#include <string>

namespace fuzzhyper {

/// Precondition or invariant violation in a library call.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed input file or string.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration or search exceeded the configured budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A witness constructor could not produce a verified witness.
struct NoWitness : std::runtime_error {
    explicit NoWitness(const std::string& what) : std::runtime_error(what) {}
};

/// A preimage request on a map whose range misses the target.
struct NoPreimage : std::runtime_error {
    NoPreimage(const std::string& what, std::string level)
        : std::runtime_error(what), missing_level(std::move(level)) {}
    std::string missing_level;  // printable description of a level with empty preimage
};

/// Exact arithmetic left the representable range.
struct ArithmeticOverflow : std::overflow_error {
    explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace fuzzhyper
