#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bcp/graph.hpp"
#include "bcp/partition.hpp"
#include "bcp/rational.hpp"

// Independent brute-force oracles. Everything here recomputes from first
// principles (adjacency matrices, explicit pair sets, exhaustive subset
// scans) so library results are checked against code that shares none of the
// library's machinery.
namespace oracle {

using Pair = std::pair<uint32_t, uint32_t>;

inline std::vector<Pair> graph_edges(const bcp::Graph& g) {
  std::vector<Pair> out;
  for (uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Multiset of pairs covered by a partition's members, counted naively.
inline std::map<Pair, uint64_t> covered_pairs(const bcp::BicliquePartition& p) {
  std::map<Pair, uint64_t> cover;
  for (const auto& b : p.items) {
    for (uint32_t l : b.left) {
      for (uint32_t r : b.right) {
        cover[{std::min(l, r), std::max(l, r)}]++;
      }
    }
  }
  return cover;
}

// True iff the members cover exactly the edge set of g, each edge once, and
// every side is sorted, nonempty, in range, and disjoint from its partner.
inline bool partitions_exactly(const bcp::Graph& g, const bcp::BicliquePartition& p) {
  if (p.n != g.vertex_count()) return false;
  for (const auto& b : p.items) {
    if (b.left.empty() || b.right.empty()) return false;
    if (!std::is_sorted(b.left.begin(), b.left.end()) ||
        std::adjacent_find(b.left.begin(), b.left.end()) != b.left.end()) {
      return false;
    }
    if (!std::is_sorted(b.right.begin(), b.right.end()) ||
        std::adjacent_find(b.right.begin(), b.right.end()) != b.right.end()) {
      return false;
    }
    for (uint32_t v : b.left) {
      if (v >= p.n) return false;
    }
    for (uint32_t v : b.right) {
      if (v >= p.n) return false;
    }
    std::set<uint32_t> ls(b.left.begin(), b.left.end());
    for (uint32_t v : b.right) {
      if (ls.count(v)) return false;
    }
  }
  const auto cover = covered_pairs(p);
  for (const auto& [pair, count] : cover) {
    if (count != 1) return false;
  }
  const auto edges = graph_edges(g);
  if (cover.size() != edges.size()) return false;
  for (const auto& e : edges) {
    if (!cover.count(e)) return false;
  }
  return true;
}

// Quadratic adjacency-matrix view used by the query and peeling oracles.
class DenseGraph {
 public:
  explicit DenseGraph(const bcp::Graph& g) : n_(g.vertex_count()), adj_(n_, std::vector<uint8_t>(n_, 0)) {
    for (const auto& [u, v] : graph_edges(g)) adj_[u][v] = adj_[v][u] = 1;
  }
  DenseGraph(uint32_t n, const std::vector<Pair>& edges)
      : n_(n), adj_(n, std::vector<uint8_t>(n, 0)) {
    for (const auto& [u, v] : edges) adj_[u][v] = adj_[v][u] = 1;
  }

  uint32_t n() const { return n_; }
  bool edge(uint32_t u, uint32_t v) const { return adj_[u][v] != 0; }

  bool is_independent(const std::vector<uint32_t>& s) const {
    for (size_t i = 0; i < s.size(); ++i) {
      for (size_t j = i + 1; j < s.size(); ++j) {
        if (adj_[s[i]][s[j]]) return false;
      }
    }
    return true;
  }

  uint64_t cut(const std::vector<uint32_t>& s, const std::vector<uint32_t>& t) const {
    uint64_t c = 0;
    for (uint32_t u : s) {
      for (uint32_t v : t) c += adj_[u][v];
    }
    return c;
  }

 private:
  uint32_t n_;
  std::vector<std::vector<uint8_t>> adj_;
};

// Exact densest subgraph by scanning all 2^n subsets; edge counts build
// incrementally from the subset without the lowest vertex. n <= 20.
inline bcp::Rational densest_exact(const bcp::Graph& g) {
  const uint32_t n = g.vertex_count();
  if (n == 0) return bcp::Rational(0, 1);
  std::vector<uint32_t> mask(n, 0);
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v : g.neighbors(u)) mask[u] |= 1u << v;
  }
  const uint32_t full = n >= 32 ? ~0u : (1u << n) - 1;
  std::vector<uint32_t> edges(static_cast<size_t>(full) + 1, 0);
  bcp::Rational best(0, 1);
  for (uint32_t s = 1; s <= full; ++s) {
    const uint32_t v = static_cast<uint32_t>(__builtin_ctz(s));
    const uint32_t rest = s & (s - 1);
    edges[s] = edges[rest] + static_cast<uint32_t>(__builtin_popcount(mask[v] & rest));
    const bcp::Rational cur(edges[s], __builtin_popcount(s));
    if (cur > best) best = cur;
  }
  return best;
}

// Mirror of the compact representation's removal semantics: explicit matrix,
// explicit removed set, degree recounted quadratically.
class RemovalSim {
 public:
  explicit RemovalSim(const bcp::Graph& g) : dense_(g), removed_(g.vertex_count(), 0) {}

  void remove(uint32_t v) { removed_[v] = 1; }
  bool removed(uint32_t v) const { return removed_[v] != 0; }

  uint64_t degree(uint32_t v) const {
    if (removed_[v]) return 0;
    uint64_t d = 0;
    for (uint32_t u = 0; u < dense_.n(); ++u) {
      if (!removed_[u] && dense_.edge(v, u)) ++d;
    }
    return d;
  }

 private:
  DenseGraph dense_;
  std::vector<uint8_t> removed_;
};

// All graphs on n vertices, enumerated by edge mask over the C(n,2) pairs in
// lexicographic order. n <= 7 keeps this tractable.
inline std::vector<Pair> pair_universe(uint32_t n) {
  std::vector<Pair> pairs;
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

inline bcp::Graph graph_from_mask(uint32_t n, const std::vector<Pair>& universe, uint64_t mask) {
  std::vector<Pair> edges;
  for (size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1) edges.push_back(universe[i]);
  }
  return bcp::Graph(n, edges);
}

inline bool same_partition(const bcp::BicliquePartition& a, const bcp::BicliquePartition& b) {
  if (a.n != b.n || a.items.size() != b.items.size()) return false;
  for (size_t i = 0; i < a.items.size(); ++i) {
    if (a.items[i].left != b.items[i].left || a.items[i].right != b.items[i].right) {
      return false;
    }
  }
  return true;
}

inline bool same_dpartition(const bcp::DCliquePartition& a, const bcp::DCliquePartition& b) {
  if (a.n != b.n || a.d != b.d || a.items.size() != b.items.size()) return false;
  for (size_t i = 0; i < a.items.size(); ++i) {
    if (a.items[i].parts != b.items[i].parts) return false;
  }
  return true;
}

}  // namespace oracle
