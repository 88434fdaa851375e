#pragma once

#include <Eigen/Dense>

#include "unruhbell/errors.hpp"

namespace unruhbell {

/// 4x4 density matrix of (Alice, kept Rindler mode) in the product basis
/// |00>, |01>, |10>, |11>, with Alice's occupation in the first slot.
struct TwoQubitDensity {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();

  double hermiticity_defect() const;  // max_ij |m - m^dagger|
  double trace_defect() const;        // |Tr m - 1|
  double min_eigenvalue() const;      // smallest eigenvalue of the Hermitian part

  // Throws if the matrix fails the Hermitian / unit-trace / PSD requirements.
  void require_physical(double herm_tol = 1e-12, double trace_tol = 1e-12,
                        double psd_floor = -1e-10) const;
};

}  // namespace unruhbell
