#include "bcp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace bcp {
namespace {

void check_endpoint(uint32_t v, uint32_t n) {
  if (v >= n) {
    throw std::invalid_argument("edge endpoint " + std::to_string(v) + " out of range, n=" +
                                std::to_string(n));
  }
}

}  // namespace

Graph::Graph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges) : n_(n) {
  m_ = edges.size();
  std::vector<uint32_t> deg(n_, 0);
  for (const auto& [u, v] : edges) {
    check_endpoint(u, n_);
    check_endpoint(v, n_);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    deg[u]++;
    deg[v]++;
  }
  off_.assign(n_ + 1, 0);
  for (uint32_t v = 0; v < n_; ++v) off_[v + 1] = off_[v] + deg[v];
  adj_.resize(2 * m_);
  std::vector<uint64_t> cur(off_.begin(), off_.end() - 1);
  for (const auto& [u, v] : edges) {
    adj_[cur[u]++] = v;
    adj_[cur[v]++] = u;
  }
  for (uint32_t v = 0; v < n_; ++v) {
    auto b = adj_.begin() + static_cast<ptrdiff_t>(off_[v]);
    auto e = adj_.begin() + static_cast<ptrdiff_t>(off_[v + 1]);
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e) {
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
  }
}

Graph::Graph(uint32_t n, std::vector<uint64_t> off, std::vector<uint32_t> adj)
    : n_(n), off_(std::move(off)), adj_(std::move(adj)) {
  if (off_.size() != static_cast<size_t>(n_) + 1 || off_[0] != 0 || off_[n_] != adj_.size() ||
      off_[n_] % 2 != 0) {
    throw std::invalid_argument("malformed CSR offsets");
  }
  m_ = off_[n_] / 2;
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
  if (u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::span<const uint32_t> Graph::neighbors_in(uint32_t v, uint32_t lo, uint32_t hi) const {
  auto row = neighbors(v);
  const uint32_t* b = std::lower_bound(row.data(), row.data() + row.size(), lo);
  const uint32_t* e = std::lower_bound(b, row.data() + row.size(), hi);
  return {b, e};
}

uint64_t Graph::trace_mask(uint32_t v, uint32_t lo, uint32_t hi) const {
  uint64_t mask = 0;
  for (uint32_t u : neighbors_in(v, lo, hi)) mask |= uint64_t{1} << (u - lo);
  return mask;
}

Rational Graph::edge_density() const {
  if (n_ < 2) throw std::invalid_argument("edge density needs n >= 2");
  return Rational(m_, uint64_t{n_} * (n_ - 1) / 2);
}

Digraph::Digraph(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& arcs) : n_(n) {
  m_ = arcs.size();
  std::vector<uint32_t> deg(n_, 0);
  for (const auto& [u, v] : arcs) {
    check_endpoint(u, n_);
    check_endpoint(v, n_);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    deg[u]++;
  }
  off_.assign(n_ + 1, 0);
  for (uint32_t v = 0; v < n_; ++v) off_[v + 1] = off_[v] + deg[v];
  adj_.resize(m_);
  std::vector<uint64_t> cur(off_.begin(), off_.end() - 1);
  for (const auto& [u, v] : arcs) adj_[cur[u]++] = v;
  for (uint32_t v = 0; v < n_; ++v) {
    auto b = adj_.begin() + static_cast<ptrdiff_t>(off_[v]);
    auto e = adj_.begin() + static_cast<ptrdiff_t>(off_[v + 1]);
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e) {
      throw std::invalid_argument("duplicate arc at vertex " + std::to_string(v));
    }
  }
}

Digraph::Digraph(uint32_t n, std::vector<uint64_t> off, std::vector<uint32_t> adj)
    : n_(n), off_(std::move(off)), adj_(std::move(adj)) {
  if (off_.size() != static_cast<size_t>(n_) + 1 || off_[0] != 0 || off_[n_] != adj_.size()) {
    throw std::invalid_argument("malformed CSR offsets");
  }
  m_ = off_[n_];
}

bool Digraph::has_arc(uint32_t u, uint32_t v) const {
  auto row = out_neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::span<const uint32_t> Digraph::out_neighbors_in(uint32_t v, uint32_t lo, uint32_t hi) const {
  auto row = out_neighbors(v);
  const uint32_t* b = std::lower_bound(row.data(), row.data() + row.size(), lo);
  const uint32_t* e = std::lower_bound(b, row.data() + row.size(), hi);
  return {b, e};
}

uint64_t Digraph::trace_mask(uint32_t v, uint32_t lo, uint32_t hi) const {
  uint64_t mask = 0;
  for (uint32_t u : out_neighbors_in(v, lo, hi)) mask |= uint64_t{1} << (u - lo);
  return mask;
}

Hypergraph::Hypergraph(uint32_t n, uint32_t d, const std::vector<std::vector<uint32_t>>& edges)
    : n_(n), d_(d), m_(edges.size()) {
  if (d_ < 2) throw std::invalid_argument("hypergraph uniformity must be >= 2");
  flat_.reserve(m_ * d_);
  for (const auto& e : edges) {
    if (e.size() != d_) throw std::invalid_argument("hyperedge arity mismatch");
    for (size_t i = 0; i < e.size(); ++i) {
      check_endpoint(e[i], n_);
      if (i > 0 && e[i] <= e[i - 1]) {
        throw std::invalid_argument("hyperedge ids must be strictly increasing");
      }
    }
    flat_.insert(flat_.end(), e.begin(), e.end());
  }
  // Duplicate detection over sorted edge views.
  std::vector<uint64_t> order(m_);
  for (uint64_t i = 0; i < m_; ++i) order[i] = i;
  auto key = [&](uint64_t i) { return std::span<const uint32_t>(flat_.data() + i * d_, d_); };
  std::sort(order.begin(), order.end(), [&](uint64_t a, uint64_t b) {
    auto ka = key(a), kb = key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });
  for (uint64_t i = 1; i < m_; ++i) {
    auto ka = key(order[i - 1]), kb = key(order[i]);
    if (std::equal(ka.begin(), ka.end(), kb.begin())) {
      throw std::invalid_argument("duplicate hyperedge");
    }
  }
}

}  // namespace bcp
