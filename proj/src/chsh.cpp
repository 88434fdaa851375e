#include "unruhbell/chsh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "unruhbell/measures.hpp"
#include "unruhbell/pauli.hpp"

namespace unruhbell {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_sqrt2 = 2.0 * std::numbers::sqrt2;

void require_unit(const Eigen::Vector3d& v, const char* name) {
  if (std::abs(v.norm() - 1.0) > 1e-12) {
    throw SettingsError(std::string("measurement direction ") + name +
                        " must be a unit vector");
  }
}

Eigen::Vector3d unit_from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Eigen::Vector3d normalized_or_z(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (n < 1e-14) return Eigen::Vector3d::UnitZ();
  return v / n;
}

// Golden-section maximization on [lo, hi]; assumes a locally unimodal slice.
template <typename F>
double golden_section_max(const F& f, double lo, double hi, double xtol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double chsh_value(const TwoQubitDensity& rho, const MeasurementSettings& s) {
  require_unit(s.a, "a");
  require_unit(s.a_prime, "a'");
  require_unit(s.b, "b");
  require_unit(s.b_prime, "b'");
  const Eigen::Matrix4cd op =
      kron(pauli_dot(s.a), pauli_dot(s.b + s.b_prime)) +
      kron(pauli_dot(s.a_prime), pauli_dot(s.b - s.b_prime));
  return (rho.m * op).trace().real();
}

double horodecki_max(const TwoQubitDensity& rho) {
  const Eigen::Matrix3d t = correlation_matrix(rho).t;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(t.transpose() * t);
  const auto& mu = solver.eigenvalues();  // ascending
  return 2.0 * std::sqrt(std::max(0.0, mu[1] + mu[2]));
}

ChshReport optimize_settings(const TwoQubitDensity& rho) {
  const Eigen::Matrix3d tt = correlation_matrix(rho).t.transpose();
  const double target = horodecki_max(rho);

  // For fixed Alice directions the optimal Bob pair is explicit:
  //   value = |T^t (a + a')| + |T^t (a - a')|,
  // so the search space is the four spherical angles of a and a'.
  const auto objective = [&tt](const std::array<double, 4>& ang) {
    const Eigen::Vector3d w1 = tt * unit_from_angles(ang[0], ang[1]);
    const Eigen::Vector3d w2 = tt * unit_from_angles(ang[2], ang[3]);
    return (w1 + w2).norm() + (w1 - w2).norm();
  };

  // Coarse scan, 12 subdivisions in theta and 24 in phi per direction.
  constexpr int theta_nodes = 13;
  constexpr int phi_nodes = 24;
  constexpr double theta_step = pi / (theta_nodes - 1);
  constexpr double phi_step = 2.0 * pi / phi_nodes;
  constexpr int node_count = theta_nodes * phi_nodes;

  std::array<Eigen::Vector3d, node_count> image;
  std::array<double, node_count> thetas;
  std::array<double, node_count> phis;
  for (int it = 0; it < theta_nodes; ++it) {
    for (int ip = 0; ip < phi_nodes; ++ip) {
      const int n = it * phi_nodes + ip;
      thetas[n] = it * theta_step;
      phis[n] = ip * phi_step;
      image[n] = tt * unit_from_angles(thetas[n], phis[n]);
    }
  }

  double best = -1.0;
  std::array<double, 4> ang{};
  for (int n1 = 0; n1 < node_count; ++n1) {
    for (int n2 = n1; n2 < node_count; ++n2) {
      const double value = (image[n1] + image[n2]).norm() +
                           (image[n1] - image[n2]).norm();
      if (value > best) {
        best = value;
        ang = {thetas[n1], phis[n1], thetas[n2], phis[n2]};
      }
    }
  }

  // Cyclic golden-section refinement with a shrinking window.
  double span = std::max(theta_step, phi_step);
  for (int sweep = 0; sweep < 48 && span > 1e-10; ++sweep, span *= 0.5) {
    for (int k = 0; k < 4; ++k) {
      const auto line = [&](double x) {
        std::array<double, 4> trial = ang;
        trial[k] = x;
        return objective(trial);
      };
      const double candidate =
          golden_section_max(line, ang[k] - span, ang[k] + span, 1e-12);
      if (line(candidate) >= objective(ang)) ang[k] = candidate;
    }
  }

  const Eigen::Vector3d a = unit_from_angles(ang[0], ang[1]);
  const Eigen::Vector3d a_prime = unit_from_angles(ang[2], ang[3]);
  const MeasurementSettings settings{
      a, a_prime, normalized_or_z(tt * (a + a_prime)),
      normalized_or_z(tt * (a - a_prime))};

  const double value = chsh_value(rho, settings);
  if (value < target - 1e-3 || value > target + 1e-6) {
    throw ConvergenceError("settings search reached " + std::to_string(value) +
                           " against a Horodecki value of " +
                           std::to_string(target));
  }
  return ChshReport{target, std::nullopt, value, settings};
}

double analytic_bmax(const UnruhParams& params, const ReductionSpec& spec) {
  // The psi_- family swaps the roles of the two frequency sectors.
  Sector sector = spec.sector;
  if (spec.initial_sign == InitialSign::minus) {
    sector = sector == Sector::particle ? Sector::antiparticle
                                        : Sector::particle;
  }
  const double own = std::abs(spec.observer == Observer::rob ? params.q_r()
                                                             : params.q_l());
  const double other = std::abs(spec.observer == Observer::rob ? params.q_l()
                                                               : params.q_r());
  return sector == Sector::particle ? two_sqrt2 * own * std::cos(params.r())
                                    : two_sqrt2 * other * std::sin(params.r());
}

ExclusivityReport exclusivity_check(const UnruhParams& params) {
  const double rob = analytic_bmax(
      params, {InitialSign::plus, Observer::rob, Sector::particle});
  const double antirob = analytic_bmax(
      params, {InitialSign::plus, Observer::antirob, Sector::particle});
  ExclusivityReport report;
  report.lhs = 0.5 * (rob + antirob);
  report.holds = report.lhs <= 2.0 + 1e-12;
  const double alpha =
      std::acos(std::clamp(std::abs(params.q_r()), 0.0, 1.0));
  report.proof_lhs = 2.0 * (1.0 + std::sin(2.0 * alpha));
  report.proof_holds = report.proof_lhs <= 4.0 + 1e-12;
  return report;
}

}  // namespace unruhbell
