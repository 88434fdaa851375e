#pragma once

#include "unruhbell/density.hpp"
#include "unruhbell/params.hpp"

namespace unruhbell {

/// Closed-form reduced two-qubit state for any of the eight
/// (initial sign, observer, sector) combinations.
///
/// Two matrix shapes cover all cases. With c = cos r, s = sin r:
///
///   outer(x, y) = 1/2 [ c^2      0    0          x* c
///                       0        s^2  0          0
///                       0        0    |y|^2 c^2  0
///                       x c      0    0          |x|^2 + |y|^2 s^2 ]
///
///   inner(x, y) = 1/2 [ c^2  0      0                  0
///                       0    s^2   -y* s               0
///                       0   -y s    |y|^2 + |x|^2 c^2  0
///                       0    0      0                  |x|^2 s^2 ]
///
/// The (sign, observer, sector) combination picks the shape and the weight
/// substitution; every entry is gated against the partial-trace path.
TwoQubitDensity reduced_state(const UnruhParams& params,
                              const ReductionSpec& spec);

}  // namespace unruhbell
