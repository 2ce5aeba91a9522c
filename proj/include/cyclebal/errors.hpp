#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclebal {

/// Malformed or inconsistent input data (bad edge list, sign conflicts, ...).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list parse failure; carries the 1-based line number.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Caller asked for something the contract does not allow.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal identity failed (non-divisible aggregate, parity mismatch,
/// non-integral orbit count). Always a bug, never a data problem.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cyclebal
