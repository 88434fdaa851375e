#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unruhbell/params.hpp"

namespace unruhbell {

// One row of a parameter sweep: the parameter point, the reduced-state label
// and every computed measure.
struct SweepRecord {
  double r = 0.0;
  double q_r_abs = 0.0;
  double q_l_abs = 0.0;
  double q_phase = 0.0;
  InitialSign initial_sign = InitialSign::plus;
  Observer observer = Observer::rob;
  Sector sector = Sector::particle;
  double concurrence = 0.0;
  double negativity = 0.0;
  double chsh_horodecki = 0.0;
  double chsh_analytic = 0.0;
};

struct SweepOptions {
  double q_r_abs = 1.0;  // |q_r|; |q_l| follows from normalization
  double q_phase = 0.0;  // phase of q_l
  int points = 200;      // r grid nodes on [0, pi/4], endpoints included
};

// points x 8 records in (r, sign, observer, sector) order. Every row is
// checked for |chsh_horodecki - chsh_analytic| <= 1e-9 before it is emitted.
std::vector<SweepRecord> run_sweep(const SweepOptions& options);

// Schema:
// r,q_r_abs,q_l_abs,q_phase,initial_sign,observer,sector,concurrence,
// negativity,chsh_horodecki,chsh_analytic
// Floats carry 12 significant digits; enums are lowercase tokens.
void write_csv(const std::vector<SweepRecord>& records, std::ostream& os);
std::string to_csv(const std::vector<SweepRecord>& records);

}  // namespace unruhbell
