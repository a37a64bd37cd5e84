#ifndef DYNGROUP_ERRORS_HPP
#define DYNGROUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dyngroup {

/// Input violates a documented precondition (bad axis, bad sign, ...).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Matrix fails ᵗL·G·L = G at the requested tolerance.
struct NotLorentzError : ValidationError {
  using ValidationError::ValidationError;
};

/// Charge/translation lists of different lengths were combined.
struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

/// Momentum is not timelike enough to be brought to a rest frame.
struct DegenerateMomentum : std::domain_error {
  using std::domain_error::domain_error;
};

/// The duality oracle hit a singular pairing system. Indicates a basis bug.
struct StructuralFailure : std::logic_error {
  using std::logic_error::logic_error;
};

/// Malformed JSON payload or a missing/ill-typed field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dyngroup

#endif  // DYNGROUP_ERRORS_HPP
