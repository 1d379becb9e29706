#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace korobov {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter sequence is not monotone at `index` (1-based).
class MonotonicityViolation : public Error {
public:
    MonotonicityViolation(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// gamma outside [0,1], alpha_1 <= 1/2, or a malformed parameter.
class RangeViolation : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain (zeta at s <= 1, divergent tau).
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A configured budget (frontier cap, node budget, box size) was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// The box handed to a brute-force oracle cannot certify its answer.
class InsufficientBox : public Error {
public:
    using Error::Error;
};

/// The requested quantity is undefined for these parameters.
class NotApplicable : public Error {
public:
    using Error::Error;
};

}  // namespace korobov
