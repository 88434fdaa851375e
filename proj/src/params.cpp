#include "unruhbell/params.hpp"

#include <cmath>

namespace unruhbell {

std::string_view to_string(InitialSign sign) noexcept {
  return sign == InitialSign::plus ? "plus" : "minus";
}

std::string_view to_string(Observer observer) noexcept {
  return observer == Observer::rob ? "rob" : "antirob";
}

std::string_view to_string(Sector sector) noexcept {
  return sector == Sector::particle ? "particle" : "antiparticle";
}

std::optional<InitialSign> parse_initial_sign(std::string_view token) noexcept {
  if (token == "plus") return InitialSign::plus;
  if (token == "minus") return InitialSign::minus;
  return std::nullopt;
}

std::optional<Observer> parse_observer(std::string_view token) noexcept {
  if (token == "rob") return Observer::rob;
  if (token == "antirob") return Observer::antirob;
  return std::nullopt;
}

std::optional<Sector> parse_sector(std::string_view token) noexcept {
  if (token == "particle") return Sector::particle;
  if (token == "antiparticle") return Sector::antiparticle;
  return std::nullopt;
}

std::string to_string(const ReductionSpec& spec) {
  std::string out;
  out += to_string(spec.initial_sign);
  out += '/';
  out += to_string(spec.observer);
  out += '/';
  out += to_string(spec.sector);
  return out;
}

UnruhParams::UnruhParams(double r, Complex q_r, Complex q_l)
    : r_(r), q_r_(q_r), q_l_(q_l) {
  if (!(r >= 0.0) || !(r <= squeezing_max)) {
    throw ParameterError("squeezing angle must lie in [0, pi/4], got " +
                         std::to_string(r));
  }
  const double weight = std::norm(q_r) + std::norm(q_l);
  if (std::abs(weight - 1.0) > 1e-12) {
    throw ParameterError("Unruh weights must satisfy |q_r|^2 + |q_l|^2 = 1, got " +
                         std::to_string(weight));
  }
}

UnruhParams UnruhParams::from_angles(double r, double alpha, double phase) {
  const Complex unit_phase(std::cos(phase), std::sin(phase));
  return UnruhParams(r, std::cos(alpha), std::sin(alpha) * unit_phase);
}

}  // namespace unruhbell
