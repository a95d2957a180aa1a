#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bcp/rational.hpp"

namespace bcp {

// Simple undirected graph over dense 0-based vertex ids, CSR adjacency,
// rows sorted ascending. Self-loops and duplicate edges are input errors.
class Graph {
 public:
  Graph() = default;
  Graph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges);
  // Adopts prebuilt CSR arrays; rows must be sorted ascending, symmetric,
  // self-loop free. Used by generators that stream adjacency.
  Graph(uint32_t n, std::vector<uint64_t> off, std::vector<uint32_t> adj);

  uint32_t vertex_count() const { return n_; }
  uint64_t edge_count() const { return m_; }

  std::span<const uint32_t> neighbors(uint32_t v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(off_[v + 1] - off_[v]); }
  bool has_edge(uint32_t u, uint32_t v) const;

  // Neighbors of v with ids in [lo, hi), as a contiguous slice of the CSR row.
  std::span<const uint32_t> neighbors_in(uint32_t v, uint32_t lo, uint32_t hi) const;

  // Bitmask over positions lo..hi-1 (bit k set iff lo+k adjacent to v). hi-lo <= 64.
  uint64_t trace_mask(uint32_t v, uint32_t lo, uint32_t hi) const;

  // m / C(n,2), exact. Requires n >= 2.
  Rational edge_density() const;

 private:
  uint32_t n_ = 0;
  uint64_t m_ = 0;
  std::vector<uint64_t> off_{0};
  std::vector<uint32_t> adj_;
};

// Directed graph, CSR out-adjacency. (u,v) and (v,u) may both be present;
// self-loops and duplicate arcs are input errors.
class Digraph {
 public:
  Digraph() = default;
  Digraph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& arcs);
  // Adopts prebuilt CSR arrays; rows sorted ascending, self-loop free.
  Digraph(uint32_t n, std::vector<uint64_t> off, std::vector<uint32_t> adj);

  uint32_t vertex_count() const { return n_; }
  uint64_t arc_count() const { return m_; }

  std::span<const uint32_t> out_neighbors(uint32_t v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  bool has_arc(uint32_t u, uint32_t v) const;
  std::span<const uint32_t> out_neighbors_in(uint32_t v, uint32_t lo, uint32_t hi) const;
  uint64_t trace_mask(uint32_t v, uint32_t lo, uint32_t hi) const;

 private:
  uint32_t n_ = 0;
  uint64_t m_ = 0;
  std::vector<uint64_t> off_{0};
  std::vector<uint32_t> adj_;
};

// d-uniform hypergraph. Each edge is a strictly increasing id tuple; duplicate
// edges are input errors. Edges are stored flat in insertion order.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(uint32_t n, uint32_t d, const std::vector<std::vector<uint32_t>>& edges);

  uint32_t vertex_count() const { return n_; }
  uint32_t uniformity() const { return d_; }
  uint64_t edge_count() const { return m_; }

  std::span<const uint32_t> edge(uint64_t i) const {
    return {flat_.data() + i * d_, flat_.data() + (i + 1) * d_};
  }

 private:
  uint32_t n_ = 0;
  uint32_t d_ = 0;
  uint64_t m_ = 0;
  std::vector<uint32_t> flat_;
};

}  // namespace bcp
