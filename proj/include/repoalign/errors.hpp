#pragma once

#include <stdexcept>
#include <string>

namespace repoalign {

/// Base class for all repoalign failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input (bad JSONL record, unparseable source). Carries a 1-based
/// line number when one is known; 0 means "not line-addressable".
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Cross-reference or invariant violation discovered while loading data.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// Operation called outside its documented domain (bad dimensions, empty
/// inputs, non-definition nodes, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Filesystem or stream failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// An index was built against different encoder parameters than the ones
/// supplied at query time.
class StalenessError : public Error {
public:
    using Error::Error;
};

} // namespace repoalign
