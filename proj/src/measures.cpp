#include "unruhbell/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "unruhbell/pauli.hpp"

namespace unruhbell {

CorrelationMatrix correlation_matrix(const TwoQubitDensity& rho) {
  const double herm = rho.hermiticity_defect();
  if (herm > 1e-12) {
    throw TomographyError("correlation matrix needs a Hermitian state, defect " +
                          std::to_string(herm));
  }
  CorrelationMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Eigen::Matrix4cd op = kron(pauli_matrix(i), pauli_matrix(j));
      const std::complex<double> expectation = (rho.m * op).trace();
      if (std::abs(expectation.imag()) > 1e-12) {
        throw TomographyError("Pauli expectation has imaginary part " +
                              std::to_string(expectation.imag()));
      }
      out.t(i, j) = expectation.real();
    }
  }
  return out;
}

double concurrence(const TwoQubitDensity& rho) {
  static const Eigen::Matrix4cd spin_flip =
      kron(pauli_matrix(1), pauli_matrix(1));
  const Eigen::Matrix4cd rho_tilde =
      spin_flip * rho.m.conjugate() * spin_flip;

  // rho * rho_tilde is similar to a PSD matrix but not Hermitian itself, so a
  // general solver is required; its spectrum must be real and nonnegative up
  // to numerical noise.
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(rho.m * rho_tilde, false);
  if (solver.info() != Eigen::Success) {
    throw InstabilityError("concurrence eigensolver failed to converge");
  }

  std::array<double, 4> lambdas{};
  for (int n = 0; n < 4; ++n) {
    const std::complex<double> ev = solver.eigenvalues()[n];
    if (std::abs(ev.imag()) > 1e-9) {
      throw InstabilityError("spin-flip spectrum has imaginary part " +
                             std::to_string(ev.imag()));
    }
    if (ev.real() < -1e-8) {
      throw InstabilityError("spin-flip spectrum has negative eigenvalue " +
                             std::to_string(ev.real()));
    }
    lambdas[n] = std::max(0.0, ev.real());
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  const double c = std::sqrt(lambdas[0]) - std::sqrt(lambdas[1]) -
                   std::sqrt(lambdas[2]) - std::sqrt(lambdas[3]);
  return std::max(0.0, c);
}

Eigen::Matrix4cd partial_transpose_alice(const Eigen::Matrix4cd& m) {
  Eigen::Matrix4cd out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out.block<2, 2>(2 * a, 2 * b) = m.block<2, 2>(2 * b, 2 * a);
    }
  }
  return out;
}

double negativity(const TwoQubitDensity& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(
      partial_transpose_alice(rho.m));
  double total = 0.0;
  for (int n = 0; n < 4; ++n) {
    total += std::max(0.0, -solver.eigenvalues()[n]);
  }
  return total;
}

}  // namespace unruhbell
