#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "bcp/check.hpp"
#include "bcp/graph.hpp"
#include "bcp/partition.hpp"
#include "bcp/tournament.hpp"

namespace bcp {

struct EpParams {
  uint32_t r = 1;        // part size
  bool per_edge = false; // trivial one-biclique-per-edge fallback
};

// Part-size policy: floor(lg n - 2 lg lg n), floored at 1 and capped at 20 so
// a 2^r bucket array stays small. Graphs below n = 4 use the per-edge
// fallback; from n = 4 on the normal construction runs (r = 1 there), which
// keeps the structural load bound valid on dense small graphs where a
// per-edge partition would not.
inline EpParams ep_params(uint32_t n) {
  if (n < 4) return {1, true};
  const double lg = std::log2(static_cast<double>(n));
  const double raw = std::floor(lg - 2.0 * std::log2(lg));
  uint32_t r = raw < 1.0 ? 1u : static_cast<uint32_t>(raw);
  if (r > 20) r = 20;
  return {r, false};
}

// Hard per-vertex load bound of the construction: within-part partners,
// buckets of the own part containing v on the S side, and one A-side entry
// per out-part of the tournament.
inline uint64_t ep_load_bound(uint32_t n, uint32_t r) {
  const uint64_t parts = (uint64_t{n} + r - 1) / r;
  return (r - 1) + (uint64_t{1} << r) + (parts + 1) / 2 + 1;
}

// Core construction. Splits [0,n) into ceil(n/r) consecutive parts, orients
// part pairs by an almost-regular tournament, and for each part P_i buckets
// every vertex of an in-beating part by its neighborhood trace on P_i.
// Each nonempty bucket becomes one biclique (S = traced subset of P_i,
// A = bucketed vertices); edges inside a part are emitted one biclique each.
//
// G needs vertex_count() and trace_mask(v, lo, hi); works for materialized
// graphs and for implicit ones, so weight at large n can be measured without
// storing adjacency. Emission order: parts ascending, bucket masks ascending,
// then within-part edges lexicographic. Requires r <= 20.
template <class G, class Sink>
void ep_stream(const G& g, uint32_t r, Sink&& sink) {
  BCP_CHECK(r >= 1 && r <= 20, "part size out of range for mask bucketing");
  const uint32_t n = g.vertex_count();
  if (n == 0) return;
  const uint32_t parts = static_cast<uint32_t>((uint64_t{n} + r - 1) / r);
  const Tournament tour(parts);
  std::vector<std::vector<uint32_t>> bucket(size_t{1} << std::min<uint32_t>(r, 20));
  std::vector<uint64_t> dirty;
  Biclique b;
  for (uint32_t i = 0; i < parts; ++i) {
    const uint32_t lo = i * r;
    const uint32_t hi = static_cast<uint32_t>(std::min<uint64_t>(uint64_t{i} * r + r, n));
    for (uint32_t j = 0; j < parts; ++j) {
      if (j == i || !tour.beats(j, i)) continue;
      const uint32_t jlo = j * r;
      const uint32_t jhi = static_cast<uint32_t>(std::min<uint64_t>(uint64_t{j} * r + r, n));
      for (uint32_t v = jlo; v < jhi; ++v) {
        const uint64_t mask = g.trace_mask(v, lo, hi);
        if (mask == 0) continue;
        if (bucket[mask].empty()) dirty.push_back(mask);
        bucket[mask].push_back(v);  // v ascending: j sweeps parts in id order
      }
    }
    std::sort(dirty.begin(), dirty.end());
    for (uint64_t mask : dirty) {
      b.left.clear();
      for (uint32_t bit = 0; bit < hi - lo; ++bit) {
        if (mask >> bit & 1) b.left.push_back(lo + bit);
      }
      b.right = bucket[mask];
      sink(b);
      bucket[mask].clear();
    }
    dirty.clear();
    for (uint32_t u = lo; u + 1 < hi; ++u) {
      uint64_t mask = g.trace_mask(u, u + 1, hi);
      while (mask != 0) {
        const uint32_t bit = static_cast<uint32_t>(std::countr_zero(mask));
        mask &= mask - 1;
        b.left.assign(1, u);
        b.right.assign(1, u + 1 + bit);
        sink(b);
      }
    }
  }
}

// Weight, member count, and per-vertex loads of the construction without
// materializing it.
struct EpSummary {
  uint32_t r = 1;
  uint64_t weight = 0;
  uint64_t bicliques = 0;
  std::vector<uint32_t> loads;
  uint32_t max_load = 0;
};

template <class G>
EpSummary ep_summarize(const G& g, uint32_t r) {
  EpSummary s;
  s.r = r;
  s.loads.assign(g.vertex_count(), 0);
  ep_stream(g, r, [&](const Biclique& b) {
    s.weight += b.left.size() + b.right.size();
    s.bicliques += 1;
    for (uint32_t v : b.left) s.loads[v]++;
    for (uint32_t v : b.right) s.loads[v]++;
  });
  for (uint32_t l : s.loads) s.max_load = std::max(s.max_load, l);
  return s;
}

// Optimal-order partitioner: consecutive parts, tournament orientation,
// trace bucketing. Weight ~ n^2 / (2 log n) on dense inputs.
BicliquePartition partition_ep(const Graph& g);
BicliquePartition partition_ep(const Graph& g, EpParams params);

// Directed variant: every vertex is traced against every part by its
// out-neighborhood (own part included), so no tournament and no within-part
// stage are needed. Members read left -> right (sources -> targets).
BicliquePartition partition_ep_directed(const Digraph& g);

// Bounded-shattering parameterization: same construction with part size
// floor(n^(1/(d+1))) and traces grouped by sorting instead of a 2^r array,
// so r may exceed the mask limit. On graphs whose distinct-trace counts grow
// polynomially (e.g. interval graphs at d = 2) the max load is o(n / log n).
BicliquePartition partition_shattering(const Graph& g, uint32_t d);

// Exact integer floor(n^(1/(d+1))).
uint32_t shattering_part_size(uint32_t n, uint32_t d);

}  // namespace bcp
