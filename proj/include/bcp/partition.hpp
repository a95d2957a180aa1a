#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcp/graph.hpp"

namespace bcp {

// Complete bipartite subgraph given by its two sides, ids sorted ascending.
// Both sides nonempty and disjoint. For directed partitions the record reads
// left -> right (every (l, r) pair is an arc).
struct Biclique {
  std::vector<uint32_t> left;
  std::vector<uint32_t> right;
};

struct BicliquePartition {
  uint32_t n = 0;
  std::vector<Biclique> items;
};

// Complete d-partite subgraph: parts pairwise disjoint, each nonempty; its edge
// set is the product (one vertex per part, read as a d-set).
struct DClique {
  std::vector<std::vector<uint32_t>> parts;
};

struct DCliquePartition {
  uint32_t n = 0;
  uint32_t d = 0;
  std::vector<DClique> items;
};

// weight = sum over members of (sum of side/part sizes) = sum of vertex loads.
uint64_t weight(const BicliquePartition& p);
uint64_t weight(const DCliquePartition& p);

// loads[v] = number of members whose vertex set contains v.
std::vector<uint32_t> loads(const BicliquePartition& p);
std::vector<uint32_t> loads(const DCliquePartition& p);

uint32_t max_load(const BicliquePartition& p);
uint32_t max_load(const DCliquePartition& p);

struct VerifyResult {
  bool ok = true;
  std::string violation;  // empty when ok
};

// Checks shape (sorted unique nonempty disjoint sides, ids < n) and that the
// members' edge sets partition E(g): every product pair an edge, each edge
// covered exactly once, total coverage m. Uses a triangular bitset for
// n <= 2^16 and a hash set above.
VerifyResult verify_partition(const Graph& g, const BicliquePartition& p);

// Directed variant: every (l, r) product pair an arc, each arc covered once.
VerifyResult verify_directed_partition(const Digraph& g, const BicliquePartition& p);

// Hypergraph variant: parts of each member pairwise disjoint, every product
// d-set an edge of h, each edge covered exactly once.
VerifyResult verify_dpartition(const Hypergraph& h, const DCliquePartition& p);

}  // namespace bcp
