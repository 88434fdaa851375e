#include "unruhbell/invariants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "unruhbell/chsh.hpp"
#include "unruhbell/closed_forms.hpp"
#include "unruhbell/fock.hpp"
#include "unruhbell/measures.hpp"
#include "unruhbell/pauli.hpp"

namespace unruhbell {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double chsh_ceiling = 2.0 * std::numbers::sqrt2;

struct Recorder {
  SuiteResult result;

  Recorder(std::string name, double tolerance) {
    result.name = std::move(name);
    result.tolerance = tolerance;
    result.worst = -std::numeric_limits<double>::infinity();
  }

  template <typename LocationFn>
  void check(double residual, LocationFn&& location) {
    ++result.checks;
    if (residual > result.worst) {
      result.worst = residual;
      result.worst_at = location();
    }
    if (!(residual <= result.tolerance)) ++result.failures;
  }
};

std::string locate(double r, double alpha, double phi) {
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "r=%.9g alpha=%.9g phi=%.9g", r, alpha,
                phi);
  return buffer;
}

std::string locate(double r, double alpha, double phi,
                   const ReductionSpec& spec) {
  return locate(r, alpha, phi) + " " + to_string(spec);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return values;
}

// Deterministic sub-lattice with both endpoints.
std::vector<double> subsample(const std::vector<double>& grid, int max_nodes) {
  const int n = static_cast<int>(grid.size());
  const int k = std::min(n, max_nodes);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const int idx = static_cast<int>(
        std::lround(static_cast<double>(i) * (n - 1) / (k - 1)));
    out.push_back(grid[static_cast<std::size_t>(idx)]);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Eigen::Vector3d random_unit(std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    v = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Eigen::Matrix2cd random_unitary(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  const double theta = 0.25 * angle(rng);
  const Complex ea(std::cos(angle(rng)), std::sin(angle(rng)));
  const Complex eb(std::cos(angle(rng)), std::sin(angle(rng)));
  Eigen::Matrix2cd u;
  u << std::cos(theta) * ea, std::sin(theta) * eb,
      -std::sin(theta) * std::conj(eb), std::cos(theta) * std::conj(ea);
  return u;
}

}  // namespace

std::vector<SuiteResult> run_invariant_suites(const CheckOptions& options) {
  if (options.grid < 2) {
    throw ParameterError("invariant grid needs at least 2 nodes per axis");
  }

  const std::vector<double> r_grid = linspace(0.0, squeezing_max, options.grid);
  const std::vector<double> alpha_grid = linspace(0.0, pi / 2.0, options.grid);
  const std::array<double, 3> phi_grid{0.0, pi / 3.0, pi / 2.0};

  Recorder state_norm("initial-state-norm", 1e-12);
  Recorder orthogonality("vacuum-particle-orthogonality", 1e-12);
  Recorder oracle("trace-vs-closed-form", 1e-12);
  Recorder hermiticity("reduced-hermiticity", 1e-12);
  Recorder unit_trace("reduced-trace", 1e-12);
  Recorder psd("reduced-psd", 1e-10);
  Recorder trace_identity("closed-form-trace-identity", 1e-12);
  Recorder phase_covariance("phase-covariance", 1e-12);
  Recorder measure_phase("measure-phase-invariance", 1e-12);
  Recorder ent_match("entanglement-consistency", 0.5);
  Recorder xstate("xstate-concurrence-form", 1e-10);
  Recorder horod_analytic("horodecki-analytic-agreement", 1e-10);
  Recorder tsirelson("tsirelson-bound", 1e-9);
  Recorder correlation_bounds("correlation-bounds", 1e-10);
  Recorder antiparticle_bound("antiparticle-sector-bound", 1e-12);
  Recorder infinite_accel("infinite-acceleration-bound", 1e-12);
  Recorder exclusivity("exclusivity-inequality", 1e-12);
  Recorder monotonicity("bmax-monotonicity", -1e-15);
  Recorder sector_shape("concurrence-sector-shape", 1e-12);
  Recorder optimizer("optimizer-horodecki-agreement", 1e-3);
  Recorder form_identity("chsh-form-identity", 1e-12);
  Recorder local_unitary("local-unitary-invariance", 1e-10);
  Recorder accel_map("acceleration-map", 1e-12);

  const auto specs = all_reduction_specs();

  for (double alpha : alpha_grid) {
    for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
      const double r = r_grid[ri];
      const bool last_r = ri + 1 == r_grid.size();

      for (double phi : phi_grid) {
        const UnruhParams params = UnruhParams::from_angles(r, alpha, phi);
        const auto at = [&] { return locate(r, alpha, phi); };

        const JointState plus = initial_state(params, InitialSign::plus);
        const JointState minus = initial_state(params, InitialSign::minus);
        state_norm.check(std::abs(plus.squared_norm() - 1.0), at);
        state_norm.check(std::abs(minus.squared_norm() - 1.0), at);

        const ModeVector vacuum = unruh_vacuum(params);
        orthogonality.check(
            std::abs(vacuum.dot(unruh_particle(params, Frequency::positive))),
            at);
        orthogonality.check(
            std::abs(vacuum.dot(unruh_particle(params, Frequency::negative))),
            at);

        const double c = std::cos(r);
        const double s = std::sin(r);
        const double ql2 = std::norm(params.q_l());
        const double qr2 = std::norm(params.q_r());
        trace_identity.check(
            std::abs(c * c + s * s + ql2 * c * c + qr2 + ql2 * s * s - 2.0),
            at);

        const ExclusivityReport report = exclusivity_check(params);
        exclusivity.check(std::max(0.0, report.lhs - 2.0), at);
        exclusivity.check(std::max(0.0, report.proof_lhs - 4.0), at);

        for (const ReductionSpec& spec : specs) {
          const JointState& source =
              spec.initial_sign == InitialSign::plus ? plus : minus;
          const TwoQubitDensity traced =
              reduce(source, spec.observer, spec.sector);
          const TwoQubitDensity closed = reduced_state(params, spec);
          const auto at_spec = [&] { return locate(r, alpha, phi, spec); };

          oracle.check((traced.m - closed.m).cwiseAbs().maxCoeff(), at_spec);
          hermiticity.check(traced.hermiticity_defect(), at_spec);
          unit_trace.check(traced.trace_defect(), at_spec);
          psd.check(std::max(0.0, -traced.min_eigenvalue()), at_spec);

          const double conc = concurrence(closed);
          const double neg = negativity(closed);
          ent_match.check((conc > 1e-9) == (neg > 1e-9) ? 0.0 : 1.0, at_spec);

          const double horod = horodecki_max(closed);
          const double analytic = analytic_bmax(params, spec);
          horod_analytic.check(std::abs(horod - analytic), at_spec);
          tsirelson.check(std::max(0.0, horod - chsh_ceiling), at_spec);

          const Eigen::Matrix3d t = correlation_matrix(closed).t;
          Eigen::JacobiSVD<Eigen::Matrix3d> svd(t);
          const double overshoot =
              std::max(std::max(0.0, t.cwiseAbs().maxCoeff() - 1.0),
                       std::max(0.0, svd.singularValues()[0] - 1.0));
          correlation_bounds.check(overshoot, at_spec);

          const bool antiparticle_like =
              (spec.initial_sign == InitialSign::plus &&
               spec.sector == Sector::antiparticle) ||
              (spec.initial_sign == InitialSign::minus &&
               spec.sector == Sector::particle);
          if (antiparticle_like) {
            antiparticle_bound.check(std::max(0.0, analytic - 2.0), at_spec);
          }
          if (last_r && spec.initial_sign == InitialSign::plus) {
            infinite_accel.check(std::max(0.0, horod - 2.0), at_spec);
          }
          if (spec.initial_sign == InitialSign::plus &&
              spec.observer == Observer::rob &&
              spec.sector == Sector::particle) {
            const double expected =
                c * std::max(0.0, std::abs(params.q_r()) -
                                      std::abs(params.q_l()) * s);
            xstate.check(std::abs(conc - expected), at_spec);
          }
        }
      }

      // Phase suites: unit phases on q_r and q_l must leave the diagonal, the
      // off-diagonal modulus, the spectrum and both measures untouched.
      {
        const UnruhParams base = UnruhParams::from_angles(r, alpha, 0.0);
        const ReductionSpec probe{InitialSign::plus, Observer::rob,
                                  Sector::particle};
        const TwoQubitDensity rho0 = reduced_state(base, probe);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig0(rho0.m);

        std::array<double, 8> conc0{};
        std::array<double, 8> neg0{};
        for (std::size_t n = 0; n < specs.size(); ++n) {
          const TwoQubitDensity rho = reduced_state(base, specs[n]);
          conc0[n] = concurrence(rho);
          neg0[n] = negativity(rho);
        }

        const std::array<std::pair<double, double>, 3> variants{
            {{0.0, pi / 3.0}, {pi / 5.0, 0.0}, {pi / 5.0, pi / 2.0}}};
        for (const auto& [chi, phi] : variants) {
          const Complex er(std::cos(chi), std::sin(chi));
          const Complex el(std::cos(phi), std::sin(phi));
          const UnruhParams variant(r, std::cos(alpha) * er,
                                    std::sin(alpha) * el);
          const auto at = [&] { return locate(r, alpha, phi); };

          const TwoQubitDensity rho = reduced_state(variant, probe);
          Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho.m);
          double residual =
              (rho.m.diagonal() - rho0.m.diagonal()).cwiseAbs().maxCoeff();
          residual = std::max(residual, std::abs(std::abs(rho.m(0, 3)) -
                                                 std::abs(rho0.m(0, 3))));
          residual = std::max(
              residual,
              (eig.eigenvalues() - eig0.eigenvalues()).cwiseAbs().maxCoeff());
          phase_covariance.check(residual, at);

          for (std::size_t n = 0; n < specs.size(); ++n) {
            const TwoQubitDensity rho_n = reduced_state(variant, specs[n]);
            const auto at_spec = [&] {
              return locate(r, alpha, phi, specs[n]);
            };
            measure_phase.check(std::abs(concurrence(rho_n) - conc0[n]),
                                at_spec);
            measure_phase.check(std::abs(negativity(rho_n) - neg0[n]),
                                at_spec);
          }
        }
      }
    }
  }

  // Strict decrease of the Rob particle-sector maximum in r, fixed weights.
  for (double alpha : alpha_grid) {
    if (std::cos(alpha) < 1e-3) continue;  // flat when q_r vanishes
    const ReductionSpec probe{InitialSign::plus, Observer::rob,
                              Sector::particle};
    double previous = horodecki_max(
        reduced_state(UnruhParams::from_angles(r_grid[0], alpha, 0.0), probe));
    for (std::size_t ri = 1; ri < r_grid.size(); ++ri) {
      const double current = horodecki_max(reduced_state(
          UnruhParams::from_angles(r_grid[ri], alpha, 0.0), probe));
      monotonicity.check(current - previous,
                         [&] { return locate(r_grid[ri], alpha, 0.0); });
      previous = current;
    }
  }

  // Concurrence trends at |q_r| = 0.85: the particle sector only loses
  // entanglement while the antiparticle sector only gains, for both wedges.
  {
    const double alpha = std::acos(0.85);
    const std::vector<double> shape_grid = linspace(0.0, squeezing_max, 200);
    for (Observer observer : {Observer::rob, Observer::antirob}) {
      for (Sector sector : {Sector::particle, Sector::antiparticle}) {
        const ReductionSpec spec{InitialSign::plus, observer, sector};
        std::vector<double> values;
        values.reserve(shape_grid.size());
        for (double r : shape_grid) {
          values.push_back(concurrence(
              reduced_state(UnruhParams::from_angles(r, alpha, 0.0), spec)));
        }
        const bool increasing = sector == Sector::antiparticle;
        if (increasing) {
          sector_shape.check(std::abs(values.front()),
                             [&] { return locate(0.0, alpha, 0.0, spec); });
        }
        for (std::size_t n = 1; n < values.size(); ++n) {
          const double step = values[n] - values[n - 1];
          sector_shape.check(increasing ? -step : step, [&] {
            return locate(shape_grid[n], alpha, 0.0, spec);
          });
        }
      }
    }
  }

  // Settings search vs the eigenvalue criterion on a sub-lattice.
  {
    const std::vector<double> sub_r = subsample(r_grid, 8);
    const std::vector<double> sub_alpha = subsample(alpha_grid, 8);
    for (double r : sub_r) {
      for (double alpha : sub_alpha) {
        for (double phi : phi_grid) {
          const UnruhParams params = UnruhParams::from_angles(r, alpha, phi);
          for (const ReductionSpec& spec : specs) {
            const auto at_spec = [&] { return locate(r, alpha, phi, spec); };
            const TwoQubitDensity rho = reduced_state(params, spec);
            try {
              const ChshReport rep = optimize_settings(rho);
              optimizer.check(
                  std::abs(rep.optimizer_value - rep.horodecki_value),
                  at_spec);
            } catch (const ConvergenceError&) {
              optimizer.check(std::numeric_limits<double>::infinity(),
                              at_spec);
            }
          }
        }
      }
    }
  }

  // Operator trace vs correlation-matrix form of the CHSH expectation.
  {
    std::mt19937 rng(0x5eed0001u);
    std::uniform_real_distribution<double> r_dist(0.0, squeezing_max);
    std::uniform_real_distribution<double> alpha_dist(0.0, pi / 2.0);
    std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * pi);
    for (int n = 0; n < 64; ++n) {
      const double r = r_dist(rng);
      const double alpha = alpha_dist(rng);
      const double phi = phi_dist(rng);
      const ReductionSpec spec = specs[rng() % specs.size()];
      const TwoQubitDensity rho =
          reduced_state(UnruhParams::from_angles(r, alpha, phi), spec);
      const MeasurementSettings settings{random_unit(rng), random_unit(rng),
                                         random_unit(rng), random_unit(rng)};
      const Eigen::Matrix3d t = correlation_matrix(rho).t;
      const double via_operator = chsh_value(rho, settings);
      const double via_t =
          settings.a.dot(t * (settings.b + settings.b_prime)) +
          settings.a_prime.dot(t * (settings.b - settings.b_prime));
      form_identity.check(std::abs(via_operator - via_t),
                          [&] { return locate(r, alpha, phi, spec); });
    }
  }

  // Horodecki value is blind to local rotations on either side.
  {
    std::mt19937 rng(0x5eed0002u);
    std::uniform_real_distribution<double> r_dist(0.0, squeezing_max);
    std::uniform_real_distribution<double> alpha_dist(0.0, pi / 2.0);
    std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * pi);
    for (int n = 0; n < 96; ++n) {
      const double r = r_dist(rng);
      const double alpha = alpha_dist(rng);
      const double phi = phi_dist(rng);
      const ReductionSpec spec = specs[rng() % specs.size()];
      const TwoQubitDensity rho =
          reduced_state(UnruhParams::from_angles(r, alpha, phi), spec);
      const Eigen::Matrix4cd rotation =
          kron(random_unitary(rng), random_unitary(rng));
      TwoQubitDensity rotated;
      rotated.m = rotation * rho.m * rotation.adjoint();
      local_unitary.check(
          std::abs(horodecki_max(rotated) - horodecki_max(rho)),
          [&] { return locate(r, alpha, phi, spec); });
    }
  }

  // Acceleration map: monotone in accel, limits 0 and pi/4 at the extremes.
  {
    double previous = 0.0;
    for (int n = 0; n <= 64; ++n) {
      const double accel = std::pow(10.0, -6.0 + 12.0 * n / 64.0);
      const double r = accel_to_r({1.0, accel, 1.0});
      const auto at = [&] { return locate(r, 0.0, 0.0); };
      if (n > 0) accel_map.check(std::max(0.0, previous - r), at);
      previous = r;
    }
    accel_map.check(std::abs(accel_to_r({1.0, 1e300, 1.0}) - squeezing_max),
                    [] { return std::string("accel=1e300"); });
    accel_map.check(std::abs(accel_to_r({1.0, 1e-300, 1.0})),
                    [] { return std::string("accel=1e-300"); });
  }

  std::vector<SuiteResult> results;
  for (Recorder* recorder :
       {&state_norm, &orthogonality, &oracle, &hermiticity, &unit_trace, &psd,
        &trace_identity, &phase_covariance, &measure_phase, &ent_match,
        &xstate, &horod_analytic, &tsirelson, &correlation_bounds,
        &antiparticle_bound, &infinite_accel, &exclusivity, &monotonicity,
        &sector_shape, &optimizer, &form_identity, &local_unitary,
        &accel_map}) {
    results.push_back(std::move(recorder->result));
  }
  return results;
}

}  // namespace unruhbell
