#pragma once

#include <Eigen/Dense>

#include "unruhbell/density.hpp"
#include "unruhbell/params.hpp"

namespace unruhbell {

/// Amplitudes over the four Rindler occupation factors in the fixed order
/// (I+, I-, II+, II-); ket |ijkl> sits at index 8i + 4j + 2k + l.
using ModeVector = Eigen::Vector<Complex, 16>;

constexpr int mode_index(int i, int j, int k, int l) {
  return 8 * i + 4 * j + 2 * k + l;
}

constexpr int joint_index(int alice, int i, int j, int k, int l) {
  return 16 * alice + mode_index(i, j, k, l);
}

/// Normalized amplitude vector over (Alice, I+, I-, II+, II-);
/// index = 16a + 8i + 4j + 2k + l.
class JointState {
 public:
  using Amplitudes = Eigen::Vector<Complex, 32>;

  // Throws NormalizationError unless sum |amp|^2 = 1 within 1e-12.
  explicit JointState(Amplitudes amplitudes);

  const Amplitudes& amplitudes() const noexcept { return amp_; }
  Complex amplitude(int alice, int i, int j, int k, int l) const {
    return amp_[joint_index(alice, i, j, k, l)];
  }
  double squared_norm() const { return amp_.squaredNorm(); }

 private:
  Amplitudes amp_;
};

// Unruh vacuum of one mode in the Rindler occupation basis:
// cos^2 r |0000> - sin r cos r |0110> + sin r cos r |1001> - sin^2 r |1111>.
ModeVector unruh_vacuum(const UnruhParams& params);

// Single-excitation Unruh states. Positive frequency:
//   q_r (cos r |1000> - sin r |1110>) + q_l (cos r |0010> + sin r |1011>),
// negative frequency:
//   q_r (cos r |0100> + sin r |1101>) + q_l (cos r |0001> - sin r |0111>).
ModeVector unruh_particle(const UnruhParams& params, Frequency frequency);

// (|0>_A (x) vacuum + |1>_A (x) excitation) / sqrt(2); the plus sign pairs
// Alice's excitation with the positive-frequency Unruh state.
JointState initial_state(const UnruhParams& params, InitialSign sign);

// Projects |state><state| onto (Alice, kept mode) where the kept mode is the
// wedge-I factor for Rob (wedge II for AntiRob) of the requested frequency
// sector; the other three occupation factors are traced out component-wise.
TwoQubitDensity reduce(const JointState& state, Observer observer,
                       Sector sector);

// arctan(exp(-pi c omega / accel)), monotone in accel with limits 0 and pi/4.
double accel_to_r(const AccelerationSpec& spec);

}  // namespace unruhbell
