#pragma once

#include <cstdint>
#include <vector>

#include "bcp/graph.hpp"
#include "bcp/partition.hpp"

namespace bcp {

enum class FinderMethod { kPartition, kTopDegree, kSampled };

// A verified complete bipartite subgraph: a and b disjoint, every (x, y)
// pair an edge. t = min(|a|, |b|) is the balanced order.
struct FoundBiclique {
  std::vector<uint32_t> a, b;
  uint32_t t = 0;
  FinderMethod method = FinderMethod::kPartition;
};

// Largest-balanced member of an existing partition. Pigeonhole gives
// t * weight(p) >= m, checked exactly. Throws std::invalid_argument on an
// edgeless graph.
FoundBiclique find_from_partition(const Graph& g, const BicliquePartition& p);

// Dense-graph heuristic with a guarantee on dense random-like inputs: take
// the r highest-degree vertices as D, keep vertices with near-expected
// adjacency into D, trace each on its first L D-neighbors, and return the
// most common trace with its holders. r maximizes the predicted balanced
// order min(floor((1 - eps)^2 gamma r), expected trace multiplicity) with
// eps = min(1 / cbrt(lg n), 0.99). Falls back to find_from_partition on
// degenerate inputs. Result is all-pairs verified before returning.
FoundBiclique find_topdeg(const Graph& g);

// Sublinear-flavored variant: fills D with vertices whose degree estimate
// over a sqrt(n) sample passes (1 - eps) gamma (n - 1), within a bounded
// sample budget, then runs the same trace phase. Deterministic per seed;
// falls back to find_topdeg if the budget runs out before D fills.
FoundBiclique find_sampled(const Graph& g, uint64_t seed);

}  // namespace bcp
