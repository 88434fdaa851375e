#pragma once

#include <Eigen/Dense>

#include "unruhbell/density.hpp"

namespace unruhbell {

// t_ij = Tr[rho sigma_i (x) sigma_j]; entries lie in [-1, 1] and the
// singular values never exceed 1 for a physical state.
struct CorrelationMatrix {
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

// Pauli tomography of a two-qubit state. Throws TomographyError if the input
// is not Hermitian within 1e-12 or a Pauli expectation picks up an imaginary
// part above that tolerance.
CorrelationMatrix correlation_matrix(const TwoQubitDensity& rho);

// Wootters concurrence: max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4))
// over the decreasing eigenvalues l_i of rho (sy(x)sy) rho* (sy(x)sy).
// Eigenvalues with imaginary part beyond 1e-9 or real part below -1e-8 raise
// InstabilityError; smaller negatives are clamped to zero.
double concurrence(const TwoQubitDensity& rho);

// (trace norm of the partial transpose - 1)/2, i.e. the absolute sum of the
// negative eigenvalues of rho^{T_A}. A Bell state gives 1/2.
double negativity(const TwoQubitDensity& rho);

// Transpose over Alice's qubit only.
Eigen::Matrix4cd partial_transpose_alice(const Eigen::Matrix4cd& m);

}  // namespace unruhbell
