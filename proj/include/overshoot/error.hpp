#pragma once

#include <stdexcept>
#include <string>

namespace overshoot {

/// An argument lies outside the domain of the function it was passed to.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative scheme (continued fraction, root finder, quadrature) did not
/// reach the requested accuracy.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Monte Carlo aggregate has no usable data (e.g. every path censored).
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace overshoot
