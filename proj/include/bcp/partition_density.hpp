#pragma once

#include <cstdint>

#include "bcp/graph.hpp"
#include "bcp/partition.hpp"

namespace bcp {

// Expected weight of the trace-bucketing construction with part size r on a
// random graph of density gamma (whole-part buckets): A-side entries per
// (vertex, out-part) with nonempty trace, S-side ids per occupied trace per
// part, and two ids per within-part edge. Requires 0 < gamma < 1.
double density_expected_weight(uint32_t n, double gamma, uint32_t r);

// Part size minimizing the model over {2..64} plus a geometric tail (factor
// 1.25) capped at max(64, ceil(4 (lg n + 2) / h2(gamma))) and n. Ties go to
// the smaller size. The asymptotic lg^2(n)/h2 prescription is what this
// approaches for huge n; at reachable sizes the model argmin is what
// actually tracks measured weight.
uint32_t density_part_size(uint32_t n, double gamma);

// Density-aware partitioner: parts sized by the calibrated model, tournament
// orientation, per-(vertex, part) traces cut into entropy slices, buckets
// keyed by (slice interval, trace-within-slice). Slicing is active only when
// n / r^4 >= sqrt(n); below that every trace is kept as one whole-part
// slice, which the same bucket path handles. Degenerate inputs: gamma = 0
// gives the empty partition, gamma = 1 and n < 4 fall back to one biclique
// per edge.
BicliquePartition partition_density(const Graph& g);

}  // namespace bcp
