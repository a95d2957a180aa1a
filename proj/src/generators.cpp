#include "bcp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "bcp/check.hpp"

namespace bcp {

uint64_t probability_threshold(double p) {
  if (p < 0.0 || !(p <= 1.0)) throw std::invalid_argument("probability out of [0,1]");
  if (p >= 1.0) return ~uint64_t{0};
  // ldexp(p, 64) can round up to 2^64 for p just below 1; clamp via long double.
  long double scaled = std::ldexp(static_cast<long double>(p), 64);
  if (scaled >= static_cast<long double>(~uint64_t{0})) return ~uint64_t{0} - 1;
  return static_cast<uint64_t>(scaled);
}

GnpOracle::GnpOracle(uint32_t n, double p, uint64_t seed)
    : n_(n), thr_(probability_threshold(p)), seed_(seed) {}

Graph gen_gnp(uint32_t n, double p, uint64_t seed) {
  const uint64_t thr = probability_threshold(p);
  // Two passes keep peak memory at the CSR arrays themselves; no edge list.
  std::vector<uint64_t> off(static_cast<size_t>(n) + 1, 0);
  for (uint32_t u = 0; u < n; ++u) {
    uint64_t deg = 0;
    for (uint32_t v = 0; v < n; ++v) {
      if (v != u && pair_hash(seed, u, v) < thr) ++deg;
    }
    off[u + 1] = off[u] + deg;
  }
  std::vector<uint32_t> adj(off[n]);
  for (uint32_t u = 0; u < n; ++u) {
    uint64_t w = off[u];
    for (uint32_t v = 0; v < n; ++v) {
      if (v != u && pair_hash(seed, u, v) < thr) adj[w++] = v;
    }
  }
  return Graph(n, std::move(off), std::move(adj));
}

Graph gen_gnm(uint32_t n, uint64_t m, uint64_t seed) {
  const uint64_t total = n < 2 ? 0 : uint64_t{n} * (n - 1) / 2;
  if (m > total) throw std::invalid_argument("gen_gnm: m exceeds pair count");
  // Sample min(m, total-m) distinct triangular indices by rejection, then
  // complement if we sampled the co-set.
  const bool complement = m > total / 2;
  const uint64_t want = complement ? total - m : m;
  std::vector<bool> picked(total, false);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> dist(0, total == 0 ? 0 : total - 1);
  uint64_t got = 0;
  while (got < want) {
    uint64_t idx = dist(rng);
    if (!picked[idx]) {
      picked[idx] = true;
      ++got;
    }
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(m);
  uint64_t idx = 0;
  for (uint32_t u = 0; u + 1 < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v, ++idx) {
      if (picked[idx] != complement) edges.emplace_back(u, v);
    }
  }
  BCP_CHECK(edges.size() == m, "gen_gnm: produced wrong edge count");
  return Graph(n, edges);
}

Digraph gen_directed_gnp(uint32_t n, double p, uint64_t seed) {
  const uint64_t thr = probability_threshold(p);
  // Ordered pairs need direction-sensitive hashing; tag the packed pair.
  auto arc_hash = [seed](uint32_t u, uint32_t v) {
    return splitmix64(seed ^ splitmix64((uint64_t{u} << 32) | v) ^ 0xd1b54a32d192ed03ULL);
  };
  std::vector<uint64_t> off(static_cast<size_t>(n) + 1, 0);
  for (uint32_t u = 0; u < n; ++u) {
    uint64_t deg = 0;
    for (uint32_t v = 0; v < n; ++v) {
      if (v != u && arc_hash(u, v) < thr) ++deg;
    }
    off[u + 1] = off[u] + deg;
  }
  std::vector<uint32_t> adj(off[n]);
  for (uint32_t u = 0; u < n; ++u) {
    uint64_t w = off[u];
    for (uint32_t v = 0; v < n; ++v) {
      if (v != u && arc_hash(u, v) < thr) adj[w++] = v;
    }
  }
  return Digraph(n, std::move(off), std::move(adj));
}

namespace {

using u128 = unsigned __int128;

constexpr u128 kRankCap = u128(1) << 126;

// C(x, y) saturated at kRankCap; exact below it.
u128 binom128(uint64_t x, uint64_t y) {
  if (y > x) return 0;
  y = std::min(y, x - y);
  u128 r = 1;
  for (uint64_t i = 1; i <= y; ++i) {
    if (r > kRankCap / (x - y + i)) return kRankCap;
    r = r * (x - y + i) / i;  // division exact: r holds C(x-y+i, i)
  }
  return std::min(r, kRankCap);
}

// Lex-rank -> ascending d-subset of [0, n) (combinatorial number system).
std::vector<uint32_t> unrank_combination(uint32_t n, uint32_t d, u128 rank) {
  std::vector<uint32_t> comb(d);
  uint32_t v = 0;
  for (uint32_t i = 0; i < d; ++i) {
    for (;; ++v) {
      const u128 below = binom128(n - 1 - v, d - 1 - i);
      if (rank < below) break;
      rank -= below;
    }
    comb[i] = v++;
  }
  return comb;
}

}  // namespace

Hypergraph gen_hypergraph(uint32_t n, uint32_t d, double p, uint64_t seed) {
  if (d < 2 || d > n) throw std::invalid_argument("gen_hypergraph: need 2 <= d <= n");
  if (p < 0.0 || !(p <= 1.0)) throw std::invalid_argument("probability out of [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<uint32_t>> edges;
  const u128 total = binom128(n, d);
  if (p >= 1.0) {
    for (u128 r = 0; r < total; ++r) edges.push_back(unrank_combination(n, d, r));
    return Hypergraph(n, d, edges);
  }
  if (p > 0.0) {
    // Geometric skips between successes match per-subset Bernoulli(p) draws
    // without touching the C(n, d) misses.
    const double log_q = std::log1p(-p);
    for (u128 rank = 0;;) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const double skip = std::floor(std::log1p(-u) / log_q);
      if (skip >= static_cast<double>(total)) break;
      rank += static_cast<u128>(skip);
      if (rank >= total) break;
      edges.push_back(unrank_combination(n, d, rank));
      ++rank;
    }
  }
  return Hypergraph(n, d, edges);
}

Graph gen_interval(uint32_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::pair<double, double>> iv(n);
  for (uint32_t i = 0; i < n; ++i) {
    double a = unif(rng), b = unif(rng);
    iv[i] = {std::min(a, b), std::max(a, b)};
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v) {
      if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

Graph gen_circulant(uint32_t n, uint32_t k) {
  if (k == 0 || 2 * uint64_t{k} >= n) throw std::invalid_argument("gen_circulant: need 0 < 2k < n");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(uint64_t{n} * k);
  for (uint32_t v = 0; v < n; ++v) {
    for (uint32_t s = 1; s <= k; ++s) {
      uint32_t u = (v + s) % n;
      if (v < u) {
        edges.emplace_back(v, u);
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

}  // namespace bcp
