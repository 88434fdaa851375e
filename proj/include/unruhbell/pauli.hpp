#pragma once

#include <Eigen/Dense>

namespace unruhbell {

// index 0, 1, 2 -> sigma_x, sigma_y, sigma_z
const Eigen::Matrix2cd& pauli_matrix(int index);

// n . sigma for a direction n in R^3 (not required to be unit length here)
Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& n);

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

}  // namespace unruhbell
