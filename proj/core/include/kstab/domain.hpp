#pragma once

#include "kstab/invariants.hpp"
#include "kstab/polytope.hpp"

namespace kstab {

// The closed region cut out by the box 0 <= c_i <= 1, the log Fano closure
// level(c) >= 0, and beta(D_i) >= 0 for every boundary prime. It always
// contains the K-semistable domain; the certify layer decides whether the
// two coincide. Requires k >= 1.
Polytope necessary_region(const PairFamily& family);

}  // namespace kstab
