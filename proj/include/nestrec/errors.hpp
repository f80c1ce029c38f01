#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nestrec {

/// Base of every recoverable error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (j <= 0, window too short, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A checked 64-bit operation would have wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (spec strings, forms, sequence files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Generation referenced an index outside [1, n-1] while computing R(n).
class DeadSequence : public Error {
public:
    DeadSequence(std::int64_t n, std::int64_t bad_index)
        : Error("sequence dies at n=" + std::to_string(n) + ": referenced index " +
                std::to_string(bad_index) + " outside [1, " + std::to_string(n - 1) + "]"),
          n_(n), bad_index_(bad_index) {}

    std::int64_t n() const noexcept { return n_; }
    std::int64_t bad_index() const noexcept { return bad_index_; }

private:
    std::int64_t n_;
    std::int64_t bad_index_;
};

class NotSatisfied : public Error {
public:
    using Error::Error;
};

class NoValidIcs : public Error {
public:
    using Error::Error;
};

/// The finite satisfaction check and the closed-form parameter conditions
/// disagreed. This can only be an implementation bug.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace nestrec
