#include "bcp/finder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "bcp/check.hpp"
#include "bcp/partition_ep.hpp"

namespace bcp {

namespace {

void verify_found(const Graph& g, const FoundBiclique& f) {
  BCP_CHECK(!f.a.empty() && !f.b.empty(), "finder result sides must be nonempty");
  for (size_t x = 0, y = 0; x < f.a.size() && y < f.b.size();) {
    if (f.a[x] == f.b[y]) check_fail("finder sides disjoint", "");
    f.a[x] < f.b[y] ? ++x : ++y;
  }
  for (uint32_t x : f.a) {
    for (uint32_t y : f.b) {
      BCP_CHECK(g.has_edge(x, y), "finder result must be complete bipartite");
    }
  }
}

double finder_eps(uint32_t n) {
  const double lg = std::log2(std::max<double>(n, 2.0));
  return std::min(1.0 / std::cbrt(lg), 0.99);
}

struct TraceParams {
  uint32_t r = 0;          // |D|; 0 means no usable size exists
  uint32_t trace_len = 0;  // L
};

// Predicted balanced order of the trace phase for each candidate |D|:
// min(L(r), expected holders of the most common trace), maximized. The
// holder estimate is |V*| * gamma^L with |V*| capped at ceil(gamma n / lg n).
TraceParams calibrate(uint32_t n, double gamma, double eps) {
  const double lgn = std::log2(std::max<double>(n, 2.0));
  const uint32_t r_hi = static_cast<uint32_t>(
      std::min<uint64_t>(n, 3 * static_cast<uint64_t>(std::ceil(lgn)) + 8));
  const double keep = (1.0 - eps) * (1.0 - eps) * gamma;
  const double cap = std::ceil(gamma * n / lgn);
  TraceParams best;
  double best_t = 0.0;
  for (uint32_t r = 1; r <= r_hi; ++r) {
    const double lf = std::floor(keep * r);
    if (lf < 1.0) continue;
    const uint32_t trace_len = static_cast<uint32_t>(lf);
    const double holders = std::max(1.0, std::floor(cap * std::pow(gamma, lf)));
    const double t = std::min<double>(trace_len, holders);
    if (t > best_t) {
      best_t = t;
      best = {r, trace_len};
    }
  }
  return best;
}

// Shared trace phase: scan vertices outside d_sorted in id order, keep those
// with at least keep_threshold neighbors in D (up to cap of them), key each
// by its first trace_len D-neighbors, and return the most common key with
// its holders (first key on ties).
bool trace_phase(const Graph& g, const std::vector<uint32_t>& d_sorted,
                 uint32_t trace_len, double keep_threshold, uint64_t cap,
                 FoundBiclique& out) {
  const uint32_t n = g.vertex_count();
  std::vector<uint8_t> in_d(n, 0);
  for (uint32_t v : d_sorted) in_d[v] = 1;
  std::vector<std::pair<std::vector<uint32_t>, uint32_t>> traced;
  for (uint32_t v = 0; v < n && traced.size() < cap; ++v) {
    if (in_d[v]) continue;
    uint32_t hits = 0;
    std::vector<uint32_t> head;
    for (uint32_t w : g.neighbors(v)) {
      if (!in_d[w]) continue;
      ++hits;
      if (head.size() < trace_len) head.push_back(w);
    }
    if (static_cast<double>(hits) >= keep_threshold && head.size() == trace_len) {
      traced.emplace_back(std::move(head), v);
    }
  }
  if (traced.empty()) return false;
  std::sort(traced.begin(), traced.end());
  size_t best_at = 0, best_run = 0;
  for (size_t k = 0; k < traced.size();) {
    size_t k2 = k + 1;
    while (k2 < traced.size() && traced[k2].first == traced[k].first) ++k2;
    if (k2 - k > best_run) {
      best_run = k2 - k;
      best_at = k;
    }
    k = k2;
  }
  out.a = traced[best_at].first;
  out.b.clear();
  for (size_t q = best_at; q < best_at + best_run; ++q) out.b.push_back(traced[q].second);
  out.t = static_cast<uint32_t>(std::min(out.a.size(), out.b.size()));
  return true;
}

}  // namespace

FoundBiclique find_from_partition(const Graph& g, const BicliquePartition& p) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("finder: graph has no edges");
  }
  BCP_CHECK(!p.items.empty(), "partition of a nonempty edge set has members");
  size_t best = 0;
  uint64_t best_t = 0;
  for (size_t i = 0; i < p.items.size(); ++i) {
    const uint64_t t = std::min(p.items[i].left.size(), p.items[i].right.size());
    if (t > best_t) {
      best_t = t;
      best = i;
    }
  }
  FoundBiclique f;
  f.a = p.items[best].left;
  f.b = p.items[best].right;
  f.t = static_cast<uint32_t>(best_t);
  f.method = FinderMethod::kPartition;
  // Pigeonhole: m = sum |L||R| <= sum t_i (|L|+|R|) <= t * weight.
  BCP_CHECK(static_cast<uint64_t>(f.t) * weight(p) >= g.edge_count(),
            "balanced order times weight must cover the edge count");
  verify_found(g, f);
  return f;
}

FoundBiclique find_topdeg(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("finder: graph has no edges");
  }
  const uint32_t n = g.vertex_count();
  const double gamma = g.edge_density().to_double();
  const double eps = finder_eps(n);
  const TraceParams tp = calibrate(n, gamma, eps);
  if (tp.r == 0) return find_from_partition(g, partition_ep(g));

  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + tp.r, order.end(),
                    [&](uint32_t a, uint32_t b) {
                      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
                      return a < b;
                    });
  std::vector<uint32_t> d(order.begin(), order.begin() + tp.r);
  std::sort(d.begin(), d.end());

  const double keep_threshold = (1.0 - eps) * (1.0 - eps) * gamma * tp.r;
  const double cap = std::ceil(gamma * n / std::log2(std::max<double>(n, 2.0)));
  FoundBiclique f;
  if (!trace_phase(g, d, tp.trace_len, keep_threshold,
                   static_cast<uint64_t>(cap), f)) {
    return find_from_partition(g, partition_ep(g));
  }
  f.method = FinderMethod::kTopDegree;
  verify_found(g, f);
  return f;
}

FoundBiclique find_sampled(const Graph& g, uint64_t seed) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("finder: graph has no edges");
  }
  const uint32_t n = g.vertex_count();
  const double gamma = g.edge_density().to_double();
  const double eps = finder_eps(n);
  const TraceParams tp = calibrate(n, gamma, eps);
  if (tp.r == 0) return find_topdeg(g);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick(0, n - 1);
  const uint32_t u_size =
      std::min<uint32_t>(n - 1, static_cast<uint32_t>(std::ceil(std::sqrt(n))));
  const uint64_t budget = std::max<uint64_t>(
      static_cast<uint64_t>(std::ceil(std::pow(n, 0.4))), 4 * uint64_t{tp.r});
  const double theta = (1.0 - eps) * gamma * (n - 1);

  std::vector<uint32_t> d;
  d.reserve(tp.r);
  std::vector<uint64_t> mark(n, 0);
  uint64_t round = 0;
  std::vector<uint8_t> in_d(n, 0);
  for (uint64_t step = 0; step < budget && d.size() < tp.r; ++step) {
    const uint32_t v = pick(rng);
    if (in_d[v]) continue;
    // Estimate deg(v) from adjacency into u_size distinct sampled vertices.
    ++round;
    uint32_t hits = 0;
    for (uint32_t got = 0; got < u_size;) {
      const uint32_t u = pick(rng);
      if (u == v || mark[u] == round) continue;
      mark[u] = round;
      ++got;
      hits += g.has_edge(v, u);
    }
    const double estimate = static_cast<double>(n - 1) * hits / u_size;
    if (estimate >= theta) {
      d.push_back(v);
      in_d[v] = 1;
    }
  }
  if (d.size() < tp.r) return find_topdeg(g);
  std::sort(d.begin(), d.end());

  const double keep_threshold = (1.0 - eps) * (1.0 - eps) * gamma * tp.r;
  const double cap = std::ceil(gamma * n / std::log2(std::max<double>(n, 2.0)));
  FoundBiclique f;
  if (!trace_phase(g, d, tp.trace_len, keep_threshold,
                   static_cast<uint64_t>(cap), f)) {
    return find_topdeg(g);
  }
  f.method = FinderMethod::kSampled;
  verify_found(g, f);
  return f;
}

}  // namespace bcp
