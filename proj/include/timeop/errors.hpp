#pragma once

#include <stdexcept>
#include <string>

namespace timeop {

/// Invalid parameters or grid choices supplied by the caller.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation received a wave function in the wrong representation.
class RepresentationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The grid does not cover enough of a state's mass.
class DomainCoverageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operator that must be symmetric produced a complex expectation.
class SymmetryViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A limiting sequence did not settle within its budget.
class ConvergenceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace timeop
