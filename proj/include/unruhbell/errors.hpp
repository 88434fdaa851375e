#pragma once

#include <stdexcept>

namespace unruhbell {

// Input outside its physical domain (squeezing angle, Unruh weights,
// acceleration map arguments).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// State vector violates the unit-norm requirement.
struct NormalizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Density matrix is not Hermitian enough for Pauli tomography.
struct TomographyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An eigenvalue pipeline produced imaginary or negative parts beyond the
// tolerated numerical noise.
struct InstabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Measurement direction is not a unit vector.
struct SettingsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Settings optimizer missed the Horodecki value after bounded refinement.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace unruhbell
