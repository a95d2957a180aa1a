#include "bcp/partition_ep.hpp"

#include <span>
#include <stdexcept>

namespace bcp {
namespace {

BicliquePartition per_edge_partition(const Graph& g) {
  BicliquePartition p;
  p.n = g.vertex_count();
  for (uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.neighbors(u)) {
      if (v > u) p.items.push_back(Biclique{{u}, {v}});
    }
  }
  return p;
}

BicliquePartition per_arc_partition(const Digraph& g) {
  BicliquePartition p;
  p.n = g.vertex_count();
  for (uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.out_neighbors(u)) p.items.push_back(Biclique{{u}, {v}});
  }
  return p;
}

// Trace order matching integer mask order for windows wider than 64 bits:
// highest differing id decides, and on a shared suffix the shorter trace
// (smaller mask) comes first. That is lexicographic order on the reversed
// id sequences.
bool trace_less(std::span<const uint32_t> a, std::span<const uint32_t> b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

BicliquePartition partition_ep(const Graph& g) { return partition_ep(g, ep_params(g.vertex_count())); }

BicliquePartition partition_ep(const Graph& g, EpParams params) {
  if (params.per_edge) return per_edge_partition(g);
  BicliquePartition p;
  p.n = g.vertex_count();
  ep_stream(g, params.r, [&](const Biclique& b) { p.items.push_back(b); });
  return p;
}

BicliquePartition partition_ep_directed(const Digraph& g) {
  const uint32_t n = g.vertex_count();
  if (n < 4) return per_arc_partition(g);
  const uint32_t r = ep_params(n).r;
  const uint32_t parts = static_cast<uint32_t>((uint64_t{n} + r - 1) / r);
  std::vector<std::vector<uint32_t>> bucket(size_t{1} << r);
  std::vector<uint64_t> dirty;
  BicliquePartition p;
  p.n = n;
  for (uint32_t i = 0; i < parts; ++i) {
    const uint32_t lo = i * r;
    const uint32_t hi = static_cast<uint32_t>(std::min<uint64_t>(uint64_t{i} * r + r, n));
    // Every vertex is bucketed by its out-trace on P_i; a vertex of P_i
    // itself never appears inside its own trace, so A and S stay disjoint.
    for (uint32_t v = 0; v < n; ++v) {
      const uint64_t mask = g.trace_mask(v, lo, hi);
      if (mask == 0) continue;
      if (bucket[mask].empty()) dirty.push_back(mask);
      bucket[mask].push_back(v);
    }
    std::sort(dirty.begin(), dirty.end());
    for (uint64_t mask : dirty) {
      Biclique b;
      b.left = bucket[mask];  // sources
      for (uint32_t bit = 0; bit < hi - lo; ++bit) {
        if (mask >> bit & 1) b.right.push_back(lo + bit);  // targets
      }
      p.items.push_back(std::move(b));
      bucket[mask].clear();
    }
    dirty.clear();
  }
  return p;
}

uint32_t shattering_part_size(uint32_t n, uint32_t d) {
  if (n == 0) return 1;
  // floor(n^(1/(d+1))) computed by integer power checks; pow() alone can sit
  // a hair under an exact root.
  uint32_t r = static_cast<uint32_t>(
      std::floor(std::pow(static_cast<double>(n), 1.0 / (d + 1.0))));
  if (r < 1) r = 1;
  auto pow_le_n = [&](uint64_t base) {
    unsigned __int128 acc = 1;
    for (uint32_t i = 0; i < d + 1; ++i) {
      acc *= base;
      if (acc > n) return false;
    }
    return true;
  };
  while (pow_le_n(uint64_t{r} + 1)) ++r;
  while (r > 1 && !pow_le_n(r)) --r;
  return r;
}

BicliquePartition partition_shattering(const Graph& g, uint32_t d) {
  if (d < 1) throw std::invalid_argument("shattering exponent must be >= 1");
  const uint32_t n = g.vertex_count();
  BicliquePartition p;
  p.n = n;
  if (n == 0) return p;
  const uint32_t r = std::min(shattering_part_size(n, d), n);
  const uint32_t parts = static_cast<uint32_t>((uint64_t{n} + r - 1) / r);
  const Tournament tour(parts);
  struct Entry {
    uint32_t v;
    std::span<const uint32_t> trace;
  };
  std::vector<Entry> entries;
  for (uint32_t i = 0; i < parts; ++i) {
    const uint32_t lo = i * r;
    const uint32_t hi = static_cast<uint32_t>(std::min<uint64_t>(uint64_t{i} * r + r, n));
    entries.clear();
    for (uint32_t j = 0; j < parts; ++j) {
      if (j == i || !tour.beats(j, i)) continue;
      const uint32_t jlo = j * r;
      const uint32_t jhi = static_cast<uint32_t>(std::min<uint64_t>(uint64_t{j} * r + r, n));
      for (uint32_t v = jlo; v < jhi; ++v) {
        auto trace = g.neighbors_in(v, lo, hi);
        if (!trace.empty()) entries.push_back({v, trace});
      }
    }
    // Stable sort keeps equal traces in ascending-v order for grouping.
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return trace_less(a.trace, b.trace);
    });
    size_t k = 0;
    while (k < entries.size()) {
      size_t e = k + 1;
      while (e < entries.size() &&
             std::equal(entries[k].trace.begin(), entries[k].trace.end(),
                        entries[e].trace.begin(), entries[e].trace.end())) {
        ++e;
      }
      Biclique b;
      b.left.assign(entries[k].trace.begin(), entries[k].trace.end());
      for (size_t t = k; t < e; ++t) b.right.push_back(entries[t].v);
      p.items.push_back(std::move(b));
      k = e;
    }
    for (uint32_t u = lo; u + 1 < hi; ++u) {
      for (uint32_t w : g.neighbors_in(u, u + 1, hi)) {
        p.items.push_back(Biclique{{u}, {w}});
      }
    }
  }
  return p;
}

}  // namespace bcp
