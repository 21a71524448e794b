#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace janus {

/// Precondition or invariant violation on caller-supplied data.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Engine and model cannot be combined (e.g. multi-spin coding on a Potts model).
class IncompatibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Exact enumeration refused because the configuration space is too large.
class TooLargeError : public DomainError {
public:
    using DomainError::DomainError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    /// The message without the line prefix.
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::string message_;
};

}  // namespace janus
