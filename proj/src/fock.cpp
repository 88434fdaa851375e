#include "unruhbell/fock.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace unruhbell {

JointState::JointState(Amplitudes amplitudes) : amp_(std::move(amplitudes)) {
  const double defect = std::abs(amp_.squaredNorm() - 1.0);
  if (defect > 1e-12) {
    throw NormalizationError("joint state norm defect " +
                             std::to_string(defect));
  }
}

ModeVector unruh_vacuum(const UnruhParams& params) {
  const double c = std::cos(params.r());
  const double s = std::sin(params.r());
  ModeVector v = ModeVector::Zero();
  v[mode_index(0, 0, 0, 0)] = c * c;
  v[mode_index(0, 1, 1, 0)] = -s * c;
  v[mode_index(1, 0, 0, 1)] = s * c;
  v[mode_index(1, 1, 1, 1)] = -s * s;
  return v;
}

ModeVector unruh_particle(const UnruhParams& params, Frequency frequency) {
  const double c = std::cos(params.r());
  const double s = std::sin(params.r());
  const Complex q_r = params.q_r();
  const Complex q_l = params.q_l();
  ModeVector v = ModeVector::Zero();
  if (frequency == Frequency::positive) {
    v[mode_index(1, 0, 0, 0)] = q_r * c;
    v[mode_index(1, 1, 1, 0)] = -q_r * s;
    v[mode_index(0, 0, 1, 0)] = q_l * c;
    v[mode_index(1, 0, 1, 1)] = q_l * s;
  } else {
    v[mode_index(0, 1, 0, 0)] = q_r * c;
    v[mode_index(1, 1, 0, 1)] = q_r * s;
    v[mode_index(0, 0, 0, 1)] = q_l * c;
    v[mode_index(0, 1, 1, 1)] = -q_l * s;
  }
  return v;
}

JointState initial_state(const UnruhParams& params, InitialSign sign) {
  const ModeVector vacuum = unruh_vacuum(params);
  const ModeVector excitation = unruh_particle(
      params, sign == InitialSign::plus ? Frequency::positive
                                        : Frequency::negative);
  constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  JointState::Amplitudes amp;
  amp.segment<16>(0) = inv_sqrt2 * vacuum;
  amp.segment<16>(16) = inv_sqrt2 * excitation;
  return JointState(std::move(amp));
}

TwoQubitDensity reduce(const JointState& state, Observer observer,
                       Sector sector) {
  const double norm_defect = std::abs(state.squared_norm() - 1.0);
  if (norm_defect > 1e-12) {
    throw NormalizationError("reduce expects a normalized state, defect " +
                             std::to_string(norm_defect));
  }

  // Kept occupation factor, counted over (I+, I-, II+, II-).
  int kept_pos = 0;
  if (observer == Observer::rob) {
    kept_pos = sector == Sector::particle ? 0 : 1;
  } else {
    kept_pos = sector == Sector::particle ? 2 : 3;
  }
  const int kept_bit = 8 >> kept_pos;

  std::array<int, 3> env_bits{};
  int n = 0;
  for (int pos = 0; pos < 4; ++pos) {
    if (pos != kept_pos) env_bits[n++] = 8 >> pos;
  }

  const auto& amp = state.amplitudes();
  TwoQubitDensity rho;
  for (int a = 0; a < 2; ++a) {
    for (int m = 0; m < 2; ++m) {
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int m2 = 0; m2 < 2; ++m2) {
          Complex sum = 0.0;
          for (int env = 0; env < 8; ++env) {
            const int env_mask = ((env & 4) ? env_bits[0] : 0) |
                                 ((env & 2) ? env_bits[1] : 0) |
                                 ((env & 1) ? env_bits[2] : 0);
            const Complex row = amp[16 * a + ((m ? kept_bit : 0) | env_mask)];
            const Complex col = amp[16 * a2 + ((m2 ? kept_bit : 0) | env_mask)];
            sum += row * std::conj(col);
          }
          rho.m(2 * a + m, 2 * a2 + m2) = sum;
        }
      }
    }
  }
  return rho;
}

double accel_to_r(const AccelerationSpec& spec) {
  if (!(spec.omega > 0.0) || !(spec.accel > 0.0) || !(spec.light_speed > 0.0)) {
    throw ParameterError(
        "acceleration map needs positive omega, accel and light speed");
  }
  const double exponent =
      -std::numbers::pi * spec.light_speed * spec.omega / spec.accel;
  return std::atan(std::exp(exponent));
}

}  // namespace unruhbell
