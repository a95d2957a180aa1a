#pragma once

#include <cstdint>
#include <vector>

#include "bcp/graph.hpp"

namespace bcp {

// Counter-mode mixer; the per-pair coin for gnp. Stateless, so G(n,p) instances
// can be evaluated lazily without materializing adjacency.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t pair_hash(uint64_t seed, uint32_t u, uint32_t v) {
  if (u > v) {
    uint32_t t = u;
    u = v;
    v = t;
  }
  return splitmix64(seed ^ splitmix64((uint64_t{u} << 32) | v));
}

// Probability threshold on a 64-bit hash. p >= 1 accepts everything.
uint64_t probability_threshold(double p);

// Implicit G(n,p): answers the same adjacency queries a Graph does, without
// storage. gen_gnp(n,p,seed) materializes exactly this graph.
class GnpOracle {
 public:
  GnpOracle(uint32_t n, double p, uint64_t seed);

  uint32_t vertex_count() const { return n_; }
  bool has_edge(uint32_t u, uint32_t v) const {
    return u != v && pair_hash(seed_, u, v) < thr_;
  }
  uint64_t trace_mask(uint32_t v, uint32_t lo, uint32_t hi) const {
    uint64_t mask = 0;
    for (uint32_t u = lo; u < hi; ++u) {
      if (has_edge(v, u)) mask |= uint64_t{1} << (u - lo);
    }
    return mask;
  }

 private:
  uint32_t n_;
  uint64_t thr_;
  uint64_t seed_;
};

// Each pair independently with probability p. Deterministic per seed.
Graph gen_gnp(uint32_t n, double p, uint64_t seed);

// Uniform graph with exactly m edges. Deterministic per seed.
Graph gen_gnm(uint32_t n, uint64_t m, uint64_t seed);

// Directed: each ordered pair (u,v), u != v, independently with probability p.
Digraph gen_directed_gnp(uint32_t n, double p, uint64_t seed);

// d-uniform: each d-subset independently with probability p.
Hypergraph gen_hypergraph(uint32_t n, uint32_t d, double p, uint64_t seed);

// Intersection graph of n random intervals (endpoints drawn uniformly).
Graph gen_interval(uint32_t n, uint64_t seed);

// 2k-regular circulant: v adjacent to v +- 1..k (mod n). Requires 2k < n.
Graph gen_circulant(uint32_t n, uint32_t k);

}  // namespace bcp
