#pragma once

#include <stdexcept>

namespace ovq {

/// Unreadable file or failed OS-level stream operation.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text; the message carries a line number where one is known.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value or combination of inputs violates a documented contract.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ovq
