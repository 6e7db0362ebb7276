#pragma once

#include <stdexcept>
#include <string>

namespace vibspec {

/// Invalid or inconsistent user-supplied parameters.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The mass matrix was not numerically positive definite.
struct CholeskyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The eigensolver did not converge, or produced eigenvalues inconsistent
/// with a definite pencil (negative beyond the clamp tolerance).
struct EigensolveFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No cubic root satisfied the physical-branch criterion.
struct BranchAmbiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Participation ratio requested from a spectrum without eigenvectors.
struct MissingVectors : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Too few usable histogram bins in the requested fit window.
struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two densities with disjoint supports cannot be compared.
struct EmptyOverlap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise meaningless numeric input.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace vibspec
