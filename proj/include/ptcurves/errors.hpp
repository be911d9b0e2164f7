#pragma once

#include <stdexcept>
#include <string>

namespace ptcurves {

/// Caller passed arguments that violate an operation's preconditions
/// (mismatched moduli, out-of-range window sizes, malformed text).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input is well formed but falls outside the mathematical domain of
/// the operation (zero has no inverse, a fiber vanishes identically, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace ptcurves
