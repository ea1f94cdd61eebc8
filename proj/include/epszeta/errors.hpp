#pragma once

#include <stdexcept>
#include <string>

namespace epszeta {

/// Raised when an argument lies outside the domain of a function
/// (negative Carlson argument, |k| >= 1 for K, non-finite input, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised by iterative routines that exhaust their iteration or
/// subdivision budget before meeting the requested accuracy.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename Real>
void require_finite(Real v, const char* function, const char* what)
{
    if (!(v - v == v - v))  // false for NaN and +-inf
        throw DomainError(std::string(function) + ": " + what + " must be finite");
}

}  // namespace detail
}  // namespace epszeta
