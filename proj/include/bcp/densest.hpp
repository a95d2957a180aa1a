#pragma once

#include <cstdint>
#include <vector>

#include "bcp/rational.hpp"
#include "bcp/representation.hpp"

namespace bcp {

struct DensestResult {
  std::vector<uint32_t> vertices;   // best live set seen, ids ascending
  Rational density;                 // exact |E[best]| / |best|
  uint32_t rounds = 0;
  std::vector<double> thresholds;   // threshold used by each peeling round
};

// Threshold peeling on the compact representation: each round reads all live
// degrees (recording the live set's exact density, which also covers every
// post-removal state, since that set is the next round's pre-removal one),
// removes every live vertex of degree < t, and multiplies t by alpha.
// Guarantees density(best) >= densest / (2 * alpha). The whole-graph density
// is the first round's reading, so forests and other edgeless-after-peel
// inputs keep the guarantee. Round count is at most ceil(log_alpha n) + 1:
// once t reaches alpha^ceil(log_alpha n) >= n > max degree, everything goes.
// alpha <= 1 throws std::invalid_argument. The engine works on its own copy
// of the representation.
DensestResult densest_approx(CBRepr cb, double alpha);

}  // namespace bcp
