#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "unruhbell/errors.hpp"

namespace unruhbell {

using Complex = std::complex<double>;

// r = pi/4 is the infinite-acceleration limit; the closed domain includes it.
inline constexpr double squeezing_max = std::numbers::pi / 4.0;

enum class InitialSign { plus, minus };
enum class Observer { rob, antirob };
enum class Sector { particle, antiparticle };
enum class Frequency { positive, negative };

std::string_view to_string(InitialSign sign) noexcept;
std::string_view to_string(Observer observer) noexcept;
std::string_view to_string(Sector sector) noexcept;

std::optional<InitialSign> parse_initial_sign(std::string_view token) noexcept;
std::optional<Observer> parse_observer(std::string_view token) noexcept;
std::optional<Sector> parse_sector(std::string_view token) noexcept;

// Selects one of the eight reduced two-qubit states: which joint state was
// prepared, which wedge the detector sits in, and which frequency sector it
// registers.
struct ReductionSpec {
  InitialSign initial_sign;
  Observer observer;
  Sector sector;
};

std::string to_string(const ReductionSpec& spec);

constexpr std::array<ReductionSpec, 8> all_reduction_specs() {
  return {{
      {InitialSign::plus, Observer::rob, Sector::particle},
      {InitialSign::plus, Observer::rob, Sector::antiparticle},
      {InitialSign::plus, Observer::antirob, Sector::particle},
      {InitialSign::plus, Observer::antirob, Sector::antiparticle},
      {InitialSign::minus, Observer::rob, Sector::particle},
      {InitialSign::minus, Observer::rob, Sector::antiparticle},
      {InitialSign::minus, Observer::antirob, Sector::particle},
      {InitialSign::minus, Observer::antirob, Sector::antiparticle},
  }};
}

/// Squeezing angle r together with the complex Unruh-mode weights (q_r, q_l).
/// Valid iff 0 <= r <= pi/4 and |q_r|^2 + |q_l|^2 = 1 within 1e-12.
class UnruhParams {
 public:
  UnruhParams(double r, Complex q_r, Complex q_l);

  // q_r = cos(alpha), q_l = sin(alpha) e^{i phase}; normalized by construction.
  static UnruhParams from_angles(double r, double alpha, double phase = 0.0);

  double r() const noexcept { return r_; }
  Complex q_r() const noexcept { return q_r_; }
  Complex q_l() const noexcept { return q_l_; }

 private:
  double r_;
  Complex q_r_;
  Complex q_l_;
};

// Physical acceleration point mapped onto the squeezing angle:
// tan r = exp(-pi c omega / accel).
struct AccelerationSpec {
  double omega = 0.0;         // mode angular frequency [rad/s]
  double accel = 0.0;         // proper acceleration [m/s^2]
  double light_speed = 299792458.0;  // [m/s]
};

}  // namespace unruhbell
