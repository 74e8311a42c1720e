#pragma once

#include <stdexcept>
#include <string>

namespace logrank {

// Base of every error thrown by the library. The CLI maps the subclasses
// onto exit codes: usage-type errors -> 1, NotFound -> 2, invariant -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A search came up empty. At desk scale this is a legitimate outcome
// (asymptotic guarantees need not kick in), so callers may recover.
class NotFound : public Error {
public:
    using Error::Error;
};

// A proven or constructed property failed to hold. Always a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidArgument(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InvariantViolation(what);
}

}  // namespace logrank
