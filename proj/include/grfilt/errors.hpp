#pragma once

#include <stdexcept>
#include <string>

namespace grfilt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: mismatched rings, malformed data, schema violations.
struct InputError : Error {
    using Error::Error;
};

/// Syntax error in the polynomial grammar; `pos` is a 0-based byte offset.
struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t pos)
        : InputError(msg + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
    std::size_t pos;
};

/// A documented precondition was violated by the caller.
struct ContractError : Error {
    using Error::Error;
};

/// Mathematically undefined request (e.g. leading term of 0).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace grfilt
