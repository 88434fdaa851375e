#pragma once

#include <Eigen/Dense>
#include <optional>

#include "unruhbell/density.hpp"
#include "unruhbell/params.hpp"

namespace unruhbell {

// The four measurement directions of a CHSH experiment; all unit vectors.
struct MeasurementSettings {
  Eigen::Vector3d a;
  Eigen::Vector3d a_prime;
  Eigen::Vector3d b;
  Eigen::Vector3d b_prime;
};

struct ExclusivityReport {
  double lhs = 0.0;        // (B_max(Rob particle) + B_max(AntiRob particle)) / 2
  bool holds = false;      // lhs <= 2 within 1e-12
  double proof_lhs = 0.0;  // 2 (1 + sin 2 alpha) with |q_r| = cos alpha
  bool proof_holds = false;
};

struct ChshReport {
  double horodecki_value = 0.0;
  std::optional<double> analytic_value;
  double optimizer_value = 0.0;
  MeasurementSettings optimal_settings;
};

// Tr[rho B] for B = a.s (x) (b+b').s + a'.s (x) (b-b').s.
// Throws SettingsError unless every direction is unit length within 1e-12.
double chsh_value(const TwoQubitDensity& rho, const MeasurementSettings& s);

// Largest achievable CHSH expectation, 2 sqrt(mu1 + mu2) with mu1 >= mu2 the
// two largest eigenvalues of T^t T.
double horodecki_max(const TwoQubitDensity& rho);

// Derivative-free search over the measurement directions, independent of the
// eigenvalue route: a coarse scan over Alice's two directions (Bob's optimal
// pair follows in closed form from the correlation matrix) plus golden-section
// refinement. Throws ConvergenceError if the best value ends up outside
// [horodecki - 1e-3, horodecki + 1e-6].
ChshReport optimize_settings(const TwoQubitDensity& rho);

// Closed forms for the eight reduced states: the particle sector of psi_+
// gives 2 sqrt(2) |q_r| cos r for Rob (|q_l| for AntiRob) and the
// antiparticle sector 2 sqrt(2) |q_l| sin r (|q_r| for AntiRob); the psi_-
// family swaps the two sectors.
double analytic_bmax(const UnruhParams& params, const ReductionSpec& spec);

// The two particle-sector maxima can never both exceed the local-realism
// bound: (B_max(Rob) + B_max(AntiRob))/2 <= 2, proven by
// 2 (1 + sin 2 alpha) <= 4 under |q_r| = cos alpha.
ExclusivityReport exclusivity_check(const UnruhParams& params);

}  // namespace unruhbell
