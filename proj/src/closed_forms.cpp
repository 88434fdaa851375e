#include "unruhbell/closed_forms.hpp"

#include <cmath>

namespace unruhbell {

namespace {

// Coherence between |00> and |11>; the shape of the particle-sector trace.
Eigen::Matrix4cd outer_form(double r, Complex x, Complex y) {
  const double c = std::cos(r);
  const double s = std::sin(r);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = c * c;
  m(1, 1) = s * s;
  m(2, 2) = std::norm(y) * c * c;
  m(3, 3) = std::norm(x) + std::norm(y) * s * s;
  m(0, 3) = std::conj(x) * c;
  m(3, 0) = x * c;
  return 0.5 * m;
}

// Coherence between |01> and |10>; the shape of the antiparticle-sector trace.
Eigen::Matrix4cd inner_form(double r, Complex x, Complex y) {
  const double c = std::cos(r);
  const double s = std::sin(r);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = c * c;
  m(1, 1) = s * s;
  m(2, 2) = std::norm(y) + std::norm(x) * c * c;
  m(3, 3) = std::norm(x) * s * s;
  m(1, 2) = -std::conj(y) * s;
  m(2, 1) = -y * s;
  return 0.5 * m;
}

}  // namespace

TwoQubitDensity reduced_state(const UnruhParams& params,
                              const ReductionSpec& spec) {
  const double r = params.r();
  const Complex q_r = params.q_r();
  const Complex q_l = params.q_l();
  const bool plus = spec.initial_sign == InitialSign::plus;
  const bool rob = spec.observer == Observer::rob;
  const bool particle = spec.sector == Sector::particle;

  // Substitution table. AntiRob exchanges the weight roles; the psi_- family
  // swaps the two sector shapes and flips the sign of the coherence weight.
  TwoQubitDensity rho;
  if (plus) {
    if (particle) {
      rho.m = rob ? outer_form(r, q_r, q_l) : outer_form(r, q_l, q_r);
    } else {
      rho.m = rob ? inner_form(r, q_r, q_l) : inner_form(r, q_l, -q_r);
    }
  } else {
    if (particle) {
      rho.m = rob ? inner_form(r, q_r, -q_l) : inner_form(r, q_l, q_r);
    } else {
      rho.m = rob ? outer_form(r, q_r, q_l) : outer_form(r, q_l, q_r);
    }
  }
  return rho;
}

}  // namespace unruhbell
