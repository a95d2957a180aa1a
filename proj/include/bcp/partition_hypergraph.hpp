#pragma once

#include "bcp/graph.hpp"
#include "bcp/partition.hpp"

namespace bcp {

// Step-up partitioner: buckets edges by least vertex, recursing on the
// (d-1)-uniform link of each bucket (kept on the same vertex range) and
// prepending the singleton; the d = 2 base case is the trace-bucketing graph
// partitioner. Simple, but the singleton vertex inherits the load of its
// whole link partition.
DCliquePartition partition_stepup(const Hypergraph& h);

// Equitable partitioner: vertices are classed round-robin mod (d-1); each
// edge is routed by the equitable distribution strategy to a class holding
// >= 2 of its vertices, grouped by (distribution, selection outside that
// class), and each group's residue inside the class is partitioned
// recursively (graph partitioner once uniformity hits 2, same-d recursion on
// the smaller class when the edge lies entirely inside one).
DCliquePartition partition_equitable(const Hypergraph& h);

}  // namespace bcp
