#pragma once

#include <stdexcept>
#include <string>

namespace choqtrace {

/// Structural precondition broken: bad shapes, ranks out of range, malformed files.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is structurally fine but mathematically outside the operation's domain
/// (non-positive element, grid missing a spectral value, scale not level-compatible).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A desk-scale guard was exceeded (2^n capacity tables, scale enumerations).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative numerical routine failed to converge within its budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace choqtrace
