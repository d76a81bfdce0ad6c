#ifndef UDR_ERRORS_HPP
#define UDR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace udr {

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands disagree on variable count, truncation degree or coefficient mode.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// An operation was requested in a coefficient mode that cannot support it
/// (e.g. row reduction in exact-integer mode).
class UnsupportedModeError : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A search or enumeration exceeded its configured resource cap.
class ResourceCapError : public Error {
public:
    explicit ResourceCapError(const std::string& what, long long required = 0,
                              long long cap = 0)
        : Error(what), required(required), cap(cap) {}
    long long required;
    long long cap;
};

/// Quotient dimension failed to stabilize below the configured bound.
class NotArtinianError : public Error {
public:
    using Error::Error;
};

/// The module is projective and the requested operation needs a
/// non-projective module.  Callers of the presentation pipeline catch this
/// and emit the trivial presentation.
class ProjectiveModuleError : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure (two supposedly equivalent computations of
/// the same quantity disagree).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace udr

#endif
