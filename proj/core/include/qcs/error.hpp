#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

// Input violates an operation's precondition (bad field, zero divisor,
// non-invertible residue, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed element / digit / point text.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::string token)
        : std::invalid_argument(what), token_(std::move(token)) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

// A configured enumeration cap would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, double requested)
        : std::runtime_error(what), requested_(requested) {}
    double requested() const noexcept { return requested_; }

private:
    double requested_;
};

}  // namespace qcs
