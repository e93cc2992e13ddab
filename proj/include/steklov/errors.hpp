#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

/// Base of every error raised by the library. Carries a process exit code
/// so the CLI can map failures without a type switch.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what, int exit_code = 4)
        : std::runtime_error(what), exit_code_(exit_code) {}

    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

/// Precondition violated (non-positive length, unit mismatch, n = 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A spectrum prefix could not be decomposed into zeros plus progressions.
class PeelInconsistency : public Error {
public:
    explicit PeelInconsistency(const std::string& what) : Error(what, 2) {}
};

/// Zero count and total progression multiplicity admit no (r, s) >= 0.
class InfeasibleCounts : public Error {
public:
    explicit InfeasibleCounts(const std::string& what) : Error(what, 3) {}
};

class EmptyClass : public Error {
public:
    using Error::Error;
};

class NotOrthogonal : public Error {
public:
    using Error::Error;
};

class OrderExceeded : public Error {
public:
    using Error::Error;
};

class NonIntegerDimension : public Error {
public:
    using Error::Error;
};

class CollectionSizeMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed group data: bad multiplication table, non-closed subgroup,
/// a representation that is not a homomorphism, ...
class InvalidGroup : public Error {
public:
    using Error::Error;
};

}  // namespace steklov
