#include "unruhbell/density.hpp"

#include <cmath>
#include <string>

namespace unruhbell {

double TwoQubitDensity::hermiticity_defect() const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double TwoQubitDensity::trace_defect() const {
  return std::abs(m.trace() - std::complex<double>(1.0));
}

double TwoQubitDensity::min_eigenvalue() const {
  const Eigen::Matrix4cd hermitian_part = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(hermitian_part);
  return solver.eigenvalues().minCoeff();
}

void TwoQubitDensity::require_physical(double herm_tol, double trace_tol,
                                       double psd_floor) const {
  if (hermiticity_defect() > herm_tol) {
    throw TomographyError("density matrix is not Hermitian, defect = " +
                          std::to_string(hermiticity_defect()));
  }
  if (trace_defect() > trace_tol) {
    throw NormalizationError("density matrix trace differs from 1 by " +
                             std::to_string(trace_defect()));
  }
  if (min_eigenvalue() < psd_floor) {
    throw InstabilityError("density matrix has eigenvalue " +
                           std::to_string(min_eigenvalue()) +
                           " below the PSD floor");
  }
}

}  // namespace unruhbell
