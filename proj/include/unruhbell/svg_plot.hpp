#pragma once

#include <string>
#include <vector>

#include "unruhbell/sweep.hpp"

namespace unruhbell {

// Self-contained two-panel SVG over r in [0, pi/4]: concurrence on the left
// (y in [0, 1]) and the maximal CHSH value on the right (y in [0, 2 sqrt 2],
// dashed rule at the local-realism bound 2). Draws the four plus-family
// curves of `records` plus the |q_r| = 1 Rob-particle curve of `reference`.
std::string render_sweep_svg(const std::vector<SweepRecord>& records,
                             const std::vector<SweepRecord>& reference);

}  // namespace unruhbell
