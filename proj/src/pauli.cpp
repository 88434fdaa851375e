#include "unruhbell/pauli.hpp"

#include <array>
#include <stdexcept>

namespace unruhbell {

const Eigen::Matrix2cd& pauli_matrix(int index) {
  static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
    const std::complex<double> i(0.0, 1.0);
    std::array<Eigen::Matrix2cd, 3> s;
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -i, i, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(index));
}

Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& n) {
  return n.x() * pauli_matrix(0) + n.y() * pauli_matrix(1) +
         n.z() * pauli_matrix(2);
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace unruhbell
