#pragma once

#include <stdexcept>
#include <string>

namespace dephase {

// Invalid numeric input: non-finite arguments, out-of-range parameters.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Quadrature refinement ran out of budget before the estimates agreed.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double previous, double latest)
        : std::runtime_error(what), previous_(previous), latest_(latest) {}

    double previous_estimate() const noexcept { return previous_; }
    double latest_estimate() const noexcept { return latest_; }

private:
    double previous_;
    double latest_;
};

// Particle kind does not match the requested coupling (e.g. charge passed
// where a pure dipole is required, or a mixed charge + dipole particle).
class SpecificationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A user-supplied geometry breaks a path-pair invariant. The message names
// the invariant.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& invariant, const std::string& detail)
        : std::invalid_argument(invariant + ": " + detail), invariant_(invariant) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

// The loop phase is not of the form A cos(w t0) + B sin(w t0).
class FormViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fringe pattern does not cover a full fringe period.
class InsufficientSpanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed scenario document, unknown unit or preset name.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dephase
