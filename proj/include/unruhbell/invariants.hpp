#pragma once

#include <string>
#include <vector>

namespace unruhbell {

struct CheckOptions {
  int grid = 50;  // nodes per (r, alpha) axis; phases are fixed to {0, pi/3, pi/2}
};

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  double worst = 0.0;      // largest residual seen
  double tolerance = 0.0;  // pass threshold for a single residual
  std::string worst_at;    // parameter point of the largest residual

  bool passed() const noexcept { return failures == 0; }
};

// Runs every module-level invariant suite on a grid x grid (r, alpha) lattice
// with three q_l phases. Throws ParameterError for grid < 2. The settings
// optimizer suite runs on a deterministic sub-lattice (at most 8 nodes per
// axis, endpoints included) to keep the runner fast; all other suites cover
// the full lattice.
std::vector<SuiteResult> run_invariant_suites(const CheckOptions& options);

}  // namespace unruhbell
