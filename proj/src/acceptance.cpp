#include "bcp/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <iterator>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "bcp/acceptance_bands.hpp"
#include "bcp/densest.hpp"
#include "bcp/distributions.hpp"
#include "bcp/entropy.hpp"
#include "bcp/finder.hpp"
#include "bcp/generators.hpp"
#include "bcp/partition_density.hpp"
#include "bcp/partition_ep.hpp"
#include "bcp/partition_hypergraph.hpp"
#include "bcp/queries.hpp"
#include "bcp/representation.hpp"

namespace bcp {

namespace {

using u128 = unsigned __int128;

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

uint64_t sub_seed(uint64_t master, uint64_t salt) {
  return splitmix64(master ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

// Runs fn(0..count-1), fanning out across up to `threads` workers. Each call
// must touch only its own result slot; iteration order is unspecified but
// the aggregate is deterministic.
template <typename Fn>
void parallel_cells(size_t count, unsigned threads, Fn&& fn) {
  threads = static_cast<unsigned>(
      std::max<size_t>(1, std::min<size_t>(threads, count)));
  if (threads <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

template <typename F>
double median_time(int reps, F&& f) {
  std::vector<double> t(reps);
  for (int i = 0; i < reps; ++i) {
    const double t0 = now_s();
    f();
    t[i] = now_s() - t0;
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

template <typename G>
uint64_t ep_weight_streamed(const G& g) {
  uint64_t w = 0;
  ep_stream(g, ep_params(g.vertex_count()).r,
            [&](const Biclique& b) { w += b.left.size() + b.right.size(); });
  return w;
}

// ---- quadratic / exponential oracles (independent of the library paths) ----

struct DenseOracle {
  uint32_t n;
  std::vector<uint8_t> adj;  // n * n

  explicit DenseOracle(const Graph& g) : n(g.vertex_count()), adj(size_t{n} * n, 0) {
    for (uint32_t u = 0; u < n; ++u) {
      for (uint32_t v : g.neighbors(u)) adj[size_t{u} * n + v] = 1;
    }
  }
  bool edge(uint32_t u, uint32_t v) const { return adj[size_t{u} * n + v] != 0; }
  bool independent(const std::vector<uint32_t>& s) const {
    for (size_t i = 0; i < s.size(); ++i) {
      for (size_t j = i + 1; j < s.size(); ++j) {
        if (edge(s[i], s[j])) return false;
      }
    }
    return true;
  }
  uint64_t cut(const std::vector<uint32_t>& s, const std::vector<uint32_t>& t) const {
    uint64_t c = 0;
    for (uint32_t u : s) {
      for (uint32_t v : t) c += edge(u, v);
    }
    return c;
  }
};

// Exact densest subgraph over all 2^n subsets, n <= 20: edge counts extend
// incrementally from subset minus lowest bit.
Rational densest_subsets_exact(const Graph& g) {
  const uint32_t n = g.vertex_count();
  if (n == 0) return Rational(0, 1);
  std::vector<uint32_t> nb(n, 0);
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v : g.neighbors(u)) nb[u] |= 1u << v;
  }
  const uint32_t full = (n >= 32) ? ~0u : (1u << n) - 1;
  std::vector<uint32_t> edges(size_t{full} + 1, 0);
  Rational best(0, 1);
  for (uint32_t s = 1; s <= full; ++s) {
    const uint32_t v = static_cast<uint32_t>(__builtin_ctz(s));
    const uint32_t rest = s & (s - 1);
    edges[s] = edges[rest] + static_cast<uint32_t>(__builtin_popcount(nb[v] & rest));
    const Rational cur(edges[s], static_cast<uint32_t>(__builtin_popcount(s)));
    if (best < cur) best = cur;
    if (s == full) break;
  }
  return best;
}

bool meets_peel_guarantee(const Rational& got, const Rational& best, uint64_t two_alpha) {
  return static_cast<u128>(got.num) * best.den * two_alpha >=
         static_cast<u128>(best.num) * got.den;
}

// All-pairs re-verification of a finder result, independent of the finder's
// own checks.
bool found_biclique_sound(const Graph& g, const FoundBiclique& f) {
  if (f.a.empty() || f.b.empty()) return false;
  if (f.t != std::min(f.a.size(), f.b.size())) return false;
  std::vector<uint32_t> all(f.a);
  all.insert(all.end(), f.b.begin(), f.b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  if (all.back() >= g.vertex_count()) return false;
  for (uint32_t x : f.a) {
    for (uint32_t y : f.b) {
      if (!g.has_edge(x, y)) return false;
    }
  }
  return true;
}

// ---- criterion 1 + 2: exactness sweep and the hard load bound ------------

struct SweepTally {
  std::atomic<int> instances{0};
  std::atomic<bool> all_ok{true};
  std::mutex mu;
  std::string first_violation;
  double worst_load_slack = 0.0;  // max over ep instances of load / bound

  void note_fail(const std::string& what) {
    all_ok = false;
    std::lock_guard<std::mutex> lock(mu);
    if (first_violation.empty()) first_violation = what;
  }
  void note_ep_load(uint64_t max_load, uint64_t bound, const std::string& tag) {
    if (max_load > bound) note_fail(tag + ": load bound violated");
    std::lock_guard<std::mutex> lock(mu);
    worst_load_slack =
        std::max(worst_load_slack, double(max_load) / double(bound));
  }
};

void sweep_graph_cell(uint32_t n, double p, uint64_t seed, SweepTally& t) {
  const Graph g = gen_gnp(n, p, seed);
  const std::string tag = fmt("gnp n=%u p=%.2f", n, p);
  {
    const BicliquePartition part = partition_ep(g);
    if (!verify_partition(g, part).ok) t.note_fail(tag + " ep");
    t.note_ep_load(max_load(part), ep_load_bound(n, ep_params(n).r), tag);
    ++t.instances;
  }
  {
    const BicliquePartition part = partition_density(g);
    if (!verify_partition(g, part).ok) t.note_fail(tag + " density");
    ++t.instances;
  }
  if (n >= 2) {
    const BicliquePartition part = partition_shattering(g, 2);
    if (!verify_partition(g, part).ok) t.note_fail(tag + " shattering");
    ++t.instances;
  }
}

void sweep_digraph_cell(uint32_t n, double p, uint64_t seed, SweepTally& t) {
  const Digraph g = gen_directed_gnp(n, p, seed);
  const BicliquePartition part = partition_ep_directed(g);
  if (!verify_directed_partition(g, part).ok) {
    t.note_fail(fmt("digraph n=%u p=%.2f", n, p));
  }
  ++t.instances;
}

void sweep_hypergraph_cell(uint32_t n, uint32_t d, uint64_t target_m,
                           uint64_t seed, SweepTally& t) {
  // p chosen to land near target_m expected edges.
  double total = 1.0;
  for (uint32_t i = 0; i < d; ++i) total *= double(n - i) / double(i + 1);
  const double p = std::min(1.0, double(target_m) / total);
  const Hypergraph h = gen_hypergraph(n, d, p, seed);
  const std::string tag = fmt("hyper n=%u d=%u m=%llu", n, d,
                              (unsigned long long)h.edge_count());
  {
    const DCliquePartition part = partition_stepup(h);
    if (!verify_dpartition(h, part).ok) t.note_fail(tag + " stepup");
    ++t.instances;
  }
  {
    const DCliquePartition part = partition_equitable(h);
    if (!verify_dpartition(h, part).ok) t.note_fail(tag + " equitable");
    ++t.instances;
  }
}

// Streaming exact-cover verification for sizes where materializing the
// partition would dominate memory: every emitted pair must be a fresh edge,
// and the count must come out to m. Also accumulates loads for the bound.
void sweep_big_ep_streamed(uint32_t n, double p, uint64_t seed, SweepTally& t) {
  const Graph g = gen_gnp(n, p, seed);
  const uint64_t pair_count = uint64_t{n} * (n - 1) / 2;
  std::vector<uint64_t> bitmap((pair_count + 63) / 64, 0);
  std::vector<uint32_t> load(n, 0);
  uint64_t covered = 0;
  bool ok = true;
  const uint32_t r = ep_params(n).r;
  ep_stream(g, r, [&](const Biclique& b) {
    for (uint32_t v : b.left) load[v]++;
    for (uint32_t v : b.right) load[v]++;
    for (uint32_t u : b.left) {
      for (uint32_t v : b.right) {
        if (!g.has_edge(u, v)) ok = false;
        const uint32_t a = std::min(u, v), c = std::max(u, v);
        const uint64_t idx =
            uint64_t{a} * n - uint64_t{a} * (a + 1) / 2 + (c - a - 1);
        if (bitmap[idx >> 6] >> (idx & 63) & 1) ok = false;
        bitmap[idx >> 6] |= uint64_t{1} << (idx & 63);
        ++covered;
      }
    }
  });
  if (!ok || covered != g.edge_count()) {
    t.note_fail(fmt("streamed ep n=%u p=%.2f", n, p));
  }
  t.note_ep_load(*std::max_element(load.begin(), load.end()),
                 ep_load_bound(n, r), fmt("streamed ep n=%u", n));
  ++t.instances;
}

struct SweepOutcome {
  int instances = 0;
  bool all_ok = false;
  double seconds = 0.0;
  double worst_load_slack = 0.0;
  std::string first_violation;
};

SweepOutcome run_sweep(const AcceptanceOptions& opt) {
  const double t0 = now_s();
  SweepTally tally;

  struct Cell {
    enum Kind { kGraph, kDigraph, kHyper } kind;
    uint32_t n, d;
    double p;
    uint64_t target_m, seed;
  };
  std::vector<Cell> cells;
  const uint32_t graph_sizes[] = {1, 2, 3, 5, 9, 17, 33, 64, 129, 257, 513, 1024};
  int salt = 0;
  for (uint32_t n : graph_sizes) {
    for (double p : {0.08, 0.5}) {
      for (int s = 0; s < 3; ++s) {
        cells.push_back({Cell::kGraph, n, 0, p, 0, sub_seed(opt.seed, salt++)});
      }
    }
  }
  const uint32_t digraph_sizes[] = {2, 5, 16, 33, 100, 257, 600};
  for (uint32_t n : digraph_sizes) {
    for (double p : {0.1, 0.5}) {
      for (int s = 0; s < 2; ++s) {
        cells.push_back({Cell::kDigraph, n, 0, p, 0, sub_seed(opt.seed, salt++)});
      }
    }
  }
  for (uint32_t n : {16u, 64u, 256u}) {
    for (uint32_t d : {3u, 4u, 5u}) {
      for (uint64_t target : {300ull, 20000ull}) {
        for (int s = 0; s < 2; ++s) {
          cells.push_back(
              {Cell::kHyper, n, d, 0.0, target, sub_seed(opt.seed, salt++)});
        }
      }
    }
  }

  parallel_cells(cells.size(), opt.threads, [&](size_t i) {
    const Cell& c = cells[i];
    switch (c.kind) {
      case Cell::kGraph: sweep_graph_cell(c.n, c.p, c.seed, tally); break;
      case Cell::kDigraph: sweep_digraph_cell(c.n, c.p, c.seed, tally); break;
      case Cell::kHyper:
        sweep_hypergraph_cell(c.n, c.d, c.target_m, c.seed, tally);
        break;
    }
  });

  // Large cells, run serially: materialized 4096-vertex instances, a
  // streamed 2^14 instance, and structured graphs for the shatter path.
  for (double p : {0.1, 0.5}) {
    const Graph g = gen_gnp(4096, p, sub_seed(opt.seed, salt++));
    const BicliquePartition part = partition_ep(g);
    if (!verify_partition(g, part).ok) tally.note_fail("gnp 4096 ep");
    tally.note_ep_load(max_load(part), ep_load_bound(4096, ep_params(4096).r),
                       "gnp 4096");
    ++tally.instances;
  }
  for (double p : {0.02, 0.3}) {
    const Graph g = gen_gnp(4096, p, sub_seed(opt.seed, salt++));
    const BicliquePartition part = partition_density(g);
    if (!verify_partition(g, part).ok) tally.note_fail("density 4096");
    ++tally.instances;
  }
  sweep_big_ep_streamed(1u << 14, 0.1, sub_seed(opt.seed, salt++), tally);
  {
    const uint32_t n = 1u << 14;
    const uint64_t m = uint64_t(0.1 * double(uint64_t{n} * (n - 1) / 2) + 0.5);
    const Graph g = gen_gnm(n, m, sub_seed(opt.seed, salt++));
    const BicliquePartition part = partition_density(g);
    if (!verify_partition(g, part).ok) tally.note_fail("density 2^14");
    ++tally.instances;
  }
  {
    const Graph g = gen_interval(1024, sub_seed(opt.seed, salt++));
    for (uint32_t d : {1u, 2u, 3u}) {
      const BicliquePartition part = partition_shattering(g, d);
      if (!verify_partition(g, part).ok) tally.note_fail("interval shattering");
      ++tally.instances;
    }
  }
  {
    const Graph g = gen_gnp(2048, 0.2, sub_seed(opt.seed, salt++));
    for (uint32_t d : {1u, 2u}) {
      const BicliquePartition part = partition_shattering(g, d);
      if (!verify_partition(g, part).ok) tally.note_fail("gnp shattering");
      ++tally.instances;
    }
  }

  SweepOutcome out;
  out.instances = tally.instances;
  out.all_ok = tally.all_ok;
  out.seconds = now_s() - t0;
  out.worst_load_slack = tally.worst_load_slack;
  out.first_violation = tally.first_violation;
  return out;
}

// ---- criterion runners ----------------------------------------------------

CriterionResult criterion_exactness(const SweepOutcome& sweep) {
  CriterionResult r;
  r.id = 1;
  r.name = "exactness";
  const bool enough = sweep.instances >= bands::kExactnessMinInstances;
  const bool in_time = sweep.seconds < bands::kExactnessBudgetSeconds;
  r.pass = sweep.all_ok && enough && in_time;
  // Details stay wall-clock-free so bench reports reproduce byte-for-byte;
  // the measured sweep time lives in the metrics.
  r.details = fmt("%d instances, %s, %s %.0fs budget%s%s", sweep.instances,
                  sweep.all_ok ? "all exact" : "VIOLATION",
                  in_time ? "within" : "OVER", bands::kExactnessBudgetSeconds,
                  enough ? "" : " (too few)",
                  sweep.first_violation.empty()
                      ? ""
                      : (" [" + sweep.first_violation + "]").c_str());
  r.metrics = {{"instances", double(sweep.instances)},
               {"seconds", sweep.seconds}};
  return r;
}

CriterionResult criterion_load_bound(const SweepOutcome& sweep) {
  CriterionResult r;
  r.id = 2;
  r.name = "load-bound";
  r.pass = sweep.all_ok && sweep.worst_load_slack <= 1.0;
  r.details = fmt("max load / bound = %.3f over all instances",
                  sweep.worst_load_slack);
  r.metrics = {{"worst_load_over_bound", sweep.worst_load_slack}};
  return r;
}

CriterionResult criterion_weight_trend(const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = 3;
  r.name = "weight-trend";
  std::vector<double> ratios;
  std::string series;
  for (uint32_t k = bands::kWeightTrendKLo; k <= bands::kWeightTrendKHi; ++k) {
    const uint32_t n = 1u << k;
    const GnpOracle o{n, 0.5, sub_seed(opt.seed, 3000 + k)};
    const EpSummary s = ep_summarize(o, ep_params(n).r);
    const double ratio = double(s.weight) * std::log(n) / (double(n) * n);
    ratios.push_back(ratio);
    series += fmt("%s2^%u:%.3f", series.empty() ? "" : " ", k, ratio);
    r.metrics.emplace_back(fmt("ratio_ln_2^%u", k), ratio);
  }
  bool decreasing = true;
  for (size_t i = 1; i < ratios.size(); ++i) {
    if (!(ratios[i] < ratios[i - 1])) decreasing = false;
  }
  const double last = ratios.back();
  const bool in_band = last >= bands::kWeightTrendLo && last <= bands::kWeightTrendHi;
  r.pass = decreasing && in_band;
  r.details = fmt("w ln(n)/n^2: %s; top %s [%.2f, %.2f], %s", series.c_str(),
                  in_band ? "in" : "OUT OF", bands::kWeightTrendLo,
                  bands::kWeightTrendHi,
                  decreasing ? "decreasing" : "NOT decreasing");
  return r;
}

CriterionResult criterion_density_trend(const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = 4;
  r.name = "density-trend";
  const uint32_t n = bands::kDensityTrendN;
  const uint64_t pair_count = uint64_t{n} * (n - 1) / 2;
  bool all_in_band = true, all_beat = true;
  std::string detail;
  int salt = 4000;
  for (double gamma : {0.05, 0.10, 0.25, 0.80}) {
    const uint64_t m = uint64_t(gamma * double(pair_count) + 0.5);
    const Graph g = gen_gnm(n, m, sub_seed(opt.seed, salt++));
    const uint64_t w_ep = ep_weight_streamed(g);
    uint64_t w_density = 0;
    {
      const BicliquePartition part = partition_density(g);
      w_density = weight(part);
    }
    const bool band_gamma =
        std::find(std::begin(bands::kDensityBandGammas),
                  std::end(bands::kDensityBandGammas),
                  gamma) != std::end(bands::kDensityBandGammas);
    const bool beat_gamma =
        std::find(std::begin(bands::kDensityBeatGammas),
                  std::end(bands::kDensityBeatGammas),
                  gamma) != std::end(bands::kDensityBeatGammas);
    const double ratio =
        double(w_density) * std::log(n) / (binary_entropy(gamma) * double(n) * n);
    if (band_gamma &&
        (ratio < bands::kDensityTrendLo || ratio > bands::kDensityTrendHi)) {
      all_in_band = false;
    }
    if (beat_gamma && !(w_density < w_ep)) all_beat = false;
    detail += fmt("%sg=%.2f:%.3f%s", detail.empty() ? "" : " ", gamma, ratio,
                  w_density < w_ep ? "<ep" : ">=ep");
    r.metrics.emplace_back(fmt("ratio_ln_g%02.0f", gamma * 100), ratio);
    r.metrics.emplace_back(fmt("w_density_g%02.0f", gamma * 100), double(w_density));
    r.metrics.emplace_back(fmt("w_ep_g%02.0f", gamma * 100), double(w_ep));
  }
  r.pass = all_in_band && all_beat;
  r.details = fmt("w ln(n)/(h2 n^2): %s; band [%.2f, %.2f] %s; beats %s",
                  detail.c_str(), bands::kDensityTrendLo, bands::kDensityTrendHi,
                  all_in_band ? "ok" : "MISSED",
                  all_beat ? "ok" : "MISSED");
  return r;
}

CriterionResult criterion_multinomial(const AcceptanceOptions&) {
  CriterionResult r;
  r.id = 5;
  r.name = "multinomial-equity";
  bool ok = true;
  std::string detail;
  for (uint32_t d = 2; d <= 8; ++d) {
    if (!multinomial_identity_ok(d)) {
      ok = false;
      detail += fmt(" d=%u identity FAILED", d);
      continue;
    }
    const SelectionStrategy st = make_equitable_strategy(d);
    std::vector<u128> mass(d - 1, 0);
    u128 total = 0;
    for (size_t i = 0; i < st.dists.size(); ++i) {
      const uint64_t w = multinomial(d, st.dists[i]);
      mass[st.assign[i]] += w;
      total += w;
    }
    u128 expect = 1;
    for (uint32_t i = 0; i < d; ++i) expect *= d - 1;
    if (total != expect) ok = false;
    for (uint32_t i = 1; i < d - 1; ++i) {
      if (mass[i] != mass[0]) ok = false;
    }
  }
  r.pass = ok;
  r.details = ok ? "identity and equal index masses, d = 2..8, integer-exact"
                 : ("FAILED:" + detail);
  return r;
}

CriterionResult criterion_queries(const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = 6;
  r.name = "query-equivalence";
  std::atomic<uint64_t> checked{0};
  std::atomic<bool> ok{true};

  // Exhaustive n <= 5.
  for (uint32_t n = 1; n <= 5 && ok; ++n) {
    std::vector<std::pair<uint32_t, uint32_t>> universe;
    for (uint32_t u = 0; u < n; ++u) {
      for (uint32_t v = u + 1; v < n; ++v) universe.emplace_back(u, v);
    }
    for (uint64_t mask = 0; mask < (uint64_t{1} << universe.size()); ++mask) {
      std::vector<std::pair<uint32_t, uint32_t>> edges;
      for (size_t i = 0; i < universe.size(); ++i) {
        if (mask >> i & 1) edges.push_back(universe[i]);
      }
      const Graph g(n, edges);
      const DenseOracle oracle(g);
      const SBRepr sb = build_sb(partition_ep(g));
      QueryEngine q(sb);
      for (uint32_t s = 0; s < (1u << n); ++s) {
        std::vector<uint32_t> vs;
        for (uint32_t v = 0; v < n; ++v) {
          if (s >> v & 1) vs.push_back(v);
        }
        if (q.is_independent(vs) != oracle.independent(vs)) ok = false;
        ++checked;
      }
      uint32_t pow3 = 1;
      for (uint32_t v = 0; v < n; ++v) pow3 *= 3;
      for (uint32_t code = 0; code < pow3; ++code) {
        std::vector<uint32_t> s, t;
        uint32_t c = code;
        for (uint32_t v = 0; v < n; ++v, c /= 3) {
          if (c % 3 == 1) s.push_back(v);
          if (c % 3 == 2) t.push_back(v);
        }
        if (q.cut(s, t) != oracle.cut(s, t)) ok = false;
        ++checked;
      }
    }
  }
  const uint64_t exhaustive = checked;

  // Sampled triples up to n = 512.
  uint64_t sampled = 0;
  const uint32_t sizes[] = {16, 48, 96, 160, 256, 384, 512};
  int salt = 6000;
  for (uint32_t n : sizes) {
    for (double p : {0.05, 0.3, 0.8}) {
      const Graph g = gen_gnp(n, p, sub_seed(opt.seed, salt++));
      const DenseOracle oracle(g);
      const SBRepr sb_ep = build_sb(partition_ep(g));
      const SBRepr sb_dn = build_sb(partition_density(g));
      QueryEngine q1(sb_ep), q2(sb_dn);
      std::mt19937_64 rng(sub_seed(opt.seed, salt++));
      for (int iter = 0; iter < 50; ++iter) {
        std::vector<uint32_t> s, t;
        for (uint32_t v = 0; v < n; ++v) {
          const uint64_t roll = rng() % 12;
          if (roll == 0) s.push_back(v);
          else if (roll == 1) t.push_back(v);
        }
        const bool indep = oracle.independent(s);
        const uint64_t cut = oracle.cut(s, t);
        if (q1.is_independent(s) != indep || q2.is_independent(s) != indep) ok = false;
        if (q1.cut(s, t) != cut || q2.cut(s, t) != cut) ok = false;
        ++sampled;
        ++checked;
      }
    }
  }

  r.pass = ok;
  r.details = fmt("%llu exhaustive + %llu sampled query matches, %s",
                  (unsigned long long)exhaustive, (unsigned long long)sampled,
                  ok ? "all equal" : "MISMATCH");
  r.metrics = {{"exhaustive", double(exhaustive)}, {"sampled", double(sampled)}};
  return r;
}

CriterionResult criterion_densest(const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = 7;
  r.name = "densest-guarantee";
  constexpr size_t kAlphaCount = std::size(bands::kDensestAlphas);
  std::atomic<uint64_t> instances{0};
  std::atomic<bool> ok{true};
  const double ps[] = {0.15, 0.35, 0.55, 0.75, 0.95};

  parallel_cells(bands::kDensestMaxN, opt.threads, [&](size_t size_idx) {
    const uint32_t n = static_cast<uint32_t>(size_idx) + 1;
    for (uint32_t i = 0; i < bands::kDensestPerSize; ++i) {
      const Graph g =
          gen_gnp(n, ps[i % std::size(ps)], sub_seed(opt.seed, 7000 + n * 1000 + i));
      const Rational best = densest_subsets_exact(g);
      const CBRepr cb(build_sb(partition_ep(g)));
      for (size_t a = 0; a < kAlphaCount; ++a) {
        const DensestResult res = densest_approx(cb, bands::kDensestAlphas[a]);
        if (!meets_peel_guarantee(res.density, best, bands::kDensestTwoAlphas[a])) {
          ok = false;
        }
        ++instances;
      }
    }
  });

  r.pass = ok;
  r.details = fmt("%llu peel runs vs subset oracle (n <= %u, %u/size), %s",
                  (unsigned long long)instances, bands::kDensestMaxN,
                  bands::kDensestPerSize,
                  ok ? "guarantee held" : "GUARANTEE VIOLATED");
  r.metrics = {{"runs", double(instances)}};
  return r;
}

CriterionResult criterion_finder(const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = 8;
  r.name = "finder";
  bool sound = true, pigeonhole = true;
  int found = 0;
  int salt = 8000;

  // Partition-backed finder: soundness plus the exact pigeonhole bound.
  for (int iter = 0; iter < 40; ++iter) {
    const uint32_t n = 8 + static_cast<uint32_t>(
                               splitmix64(sub_seed(opt.seed, salt)) % 500);
    const double p = 0.05 + 0.018 * (iter % 50);
    const Graph g = gen_gnp(n, p, sub_seed(opt.seed, salt++));
    if (g.edge_count() == 0) continue;
    for (int algo = 0; algo < 2; ++algo) {
      const BicliquePartition part =
          algo == 0 ? partition_ep(g) : partition_density(g);
      const FoundBiclique f = find_from_partition(g, part);
      if (!found_biclique_sound(g, f)) sound = false;
      if (uint64_t{f.t} * weight(part) < g.edge_count()) pigeonhole = false;
      ++found;
    }
  }
  // Heuristic finders across shapes.
  for (int iter = 0; iter < 30; ++iter) {
    const uint32_t n = 16 + static_cast<uint32_t>(
                                splitmix64(sub_seed(opt.seed, salt)) % 1009);
    const double p = 0.1 + 0.028 * (iter % 30);
    const Graph g = gen_gnp(n, p, sub_seed(opt.seed, salt++));
    if (g.edge_count() == 0) continue;
    if (!found_biclique_sound(g, find_topdeg(g))) sound = false;
    ++found;
    if (iter % 2 == 0) {
      if (!found_biclique_sound(g, find_sampled(g, sub_seed(opt.seed, salt++)))) {
        sound = false;
      }
      ++found;
    }
  }
  {
    const Graph g = gen_circulant(4096, 1024);
    if (!found_biclique_sound(g, find_sampled(g, sub_seed(opt.seed, salt++)))) {
      sound = false;
    }
    ++found;
  }

  // Balanced-order floor on dense random instances.
  uint32_t min_t = UINT32_MAX;
  for (int s = 0; s < 3; ++s) {
    const Graph g = gen_gnp(bands::kFinderN, 0.5, sub_seed(opt.seed, salt++));
    const FoundBiclique f = find_topdeg(g);
    if (!found_biclique_sound(g, f)) sound = false;
    min_t = std::min(min_t, f.t);
    ++found;
  }
  const bool floor_ok = min_t >= bands::kFinderFloor;

  r.pass = sound && pigeonhole && floor_ok;
  r.details = fmt("%d finds all-pairs %s; pigeonhole %s; min t=%u on "
                  "G(2^13, 1/2) (floor %u)",
                  found, sound ? "sound" : "UNSOUND",
                  pigeonhole ? "exact" : "VIOLATED", min_t, bands::kFinderFloor);
  r.metrics = {{"finds", double(found)}, {"min_t_dense", double(min_t)}};
  return r;
}

CriterionResult criterion_representation(const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = 9;
  r.name = "representation";
  bool ok = true;
  int instances = 0;
  int salt = 9000;
  for (int iter = 0; iter < 60; ++iter) {
    const uint32_t n = 1 + static_cast<uint32_t>(
                               splitmix64(sub_seed(opt.seed, salt)) % 300);
    const double p = 0.04 + 0.03 * (iter % 30);
    const Graph g = gen_gnp(n, p, sub_seed(opt.seed, salt++));
    const SBRepr sb = build_sb(partition_ep(g));

    // Round trip: serialize, parse, reserialize; decode must equal E(G).
    const std::vector<uint8_t> bytes = serialize_sb(sb);
    const SBRepr back = parse_sb(bytes);
    if (serialize_sb(back) != bytes) ok = false;
    std::vector<std::pair<uint32_t, uint32_t>> want;
    for (uint32_t u = 0; u < n; ++u) {
      for (uint32_t v : g.neighbors(u)) {
        if (u < v) want.emplace_back(u, v);
      }
    }
    std::sort(want.begin(), want.end());
    if (decode_edges(back) != want) ok = false;

    // Exact bit accounting against an independent ceil-lg computation.
    uint32_t bits = 0;
    while ((uint64_t{1} << bits) < n) ++bits;
    const uint64_t w = sb.weight();
    if (sb.id_bits() != w * bits) ok = false;
    const CBRepr cb(sb);
    if (cb.extra_bits() != w * (2 * uint64_t{bits} + 1)) ok = false;
    ++instances;
  }
  r.pass = ok;
  r.details = fmt("%d round trips with exact id/extra bit accounting, %s",
                  instances, ok ? "all exact" : "MISMATCH");
  r.metrics = {{"instances", double(instances)}};
  return r;
}

CriterionResult criterion_runtime(const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = 10;
  r.name = "runtime-scaling";
  r.soft = true;

  // Quadratic partitioner: time(n) vs time(n/2), streamed G(n, 1/2).
  const GnpOracle big{1u << 16, 0.5, sub_seed(opt.seed, 10001)};
  const GnpOracle half{1u << 15, 0.5, sub_seed(opt.seed, 10002)};
  volatile uint64_t sink = 0;
  const double t_big =
      median_time(3, [&] { sink = sink + ep_weight_streamed(big); });
  const double t_half =
      median_time(3, [&] { sink = sink + ep_weight_streamed(half); });
  const double ep_ratio = t_big / t_half;

  // Density partitioner: m doubles at fixed n.
  const uint32_t n = bands::kDensityTrendN;
  const uint64_t pair_count = uint64_t{n} * (n - 1) / 2;
  const Graph g1 = gen_gnm(n, pair_count / 10, sub_seed(opt.seed, 10003));
  const Graph g2 = gen_gnm(n, pair_count / 5, sub_seed(opt.seed, 10004));
  const double t_m =
      median_time(3, [&] { sink = sink + weight(partition_density(g1)); });
  const double t_2m =
      median_time(3, [&] { sink = sink + weight(partition_density(g2)); });
  const double density_ratio = t_2m / t_m;

  // Peeling: alpha 4 vs alpha 2 on one compact representation. An interval
  // graph's broad degree spread makes every round remove something, so the
  // cost tracks the round count; on G(n, 1/2) both alphas pay the same
  // full-cost rounds until the threshold crosses the concentrated degree,
  // which buries the round-count signal this criterion is after.
  const Graph gd = gen_interval(1u << 14, sub_seed(opt.seed, 10005));
  const CBRepr cb(build_sb(partition_ep(gd)));
  const double t_a2 =
      median_time(5, [&] { sink = sink + densest_approx(cb, 2.0).rounds; });
  const double t_a4 =
      median_time(5, [&] { sink = sink + densest_approx(cb, 4.0).rounds; });
  const double densest_ratio = t_a4 / t_a2;

  const bool ep_ok = ep_ratio >= bands::kEpTimeRatioLo &&
                     ep_ratio <= bands::kEpTimeRatioHi;
  const bool density_ok = density_ratio >= bands::kDensityTimeRatioLo &&
                          density_ratio <= bands::kDensityTimeRatioHi;
  const bool densest_ok = densest_ratio >= bands::kDensestTimeRatioLo &&
                          densest_ratio <= bands::kDensestTimeRatioHi;
  r.pass = ep_ok && density_ok && densest_ok;
  r.details = fmt(
      "ep 2x-n ratio %.2f [%.1f, %.1f]%s; density 2x-m ratio %.2f "
      "[%.1f, %.1f]%s; peel alpha ratio %.2f [%.1f, %.1f]%s",
      ep_ratio, bands::kEpTimeRatioLo, bands::kEpTimeRatioHi, ep_ok ? "" : " WARN",
      density_ratio, bands::kDensityTimeRatioLo, bands::kDensityTimeRatioHi,
      density_ok ? "" : " WARN", densest_ratio, bands::kDensestTimeRatioLo,
      bands::kDensestTimeRatioHi, densest_ok ? "" : " WARN");
  r.metrics = {{"ep_time_ratio", ep_ratio},
               {"density_time_ratio", density_ratio},
               {"densest_time_ratio", densest_ratio}};
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> results;
  const auto log_result = [&](CriterionResult res, double t0) {
    res.metrics.emplace_back("seconds", now_s() - t0);
    if (opt.log) {
      *opt.log << fmt("[%2d/10] %-20s %s  %s\n", res.id, res.name.c_str(),
                      res.pass ? (res.soft ? "PASS" : "PASS")
                               : (res.soft ? "WARN" : "FAIL"),
                      res.details.c_str());
      opt.log->flush();
    }
    results.push_back(std::move(res));
  };

  // Criteria 1 and 2 share one sweep over the instance matrix.
  {
    const double t0 = now_s();
    const SweepOutcome sweep = run_sweep(opt);
    log_result(criterion_exactness(sweep), t0);
    log_result(criterion_load_bound(sweep), t0);
  }
  using Runner = CriterionResult (*)(const AcceptanceOptions&);
  const Runner runners[] = {
      criterion_weight_trend, criterion_density_trend, criterion_multinomial,
      criterion_queries,      criterion_densest,       criterion_finder,
      criterion_representation, criterion_runtime,
  };
  for (Runner runner : runners) {
    const double t0 = now_s();
    CriterionResult res;
    try {
      res = runner(opt);
    } catch (const std::exception& e) {
      // Identify which runner failed by running order: ids 3..10.
      res.id = results.empty() ? 3 : results.back().id + 1;
      res.name = "criterion";
      res.pass = false;
      res.details = std::string("exception: ") + e.what();
    }
    log_result(std::move(res), t0);
  }
  return results;
}

bool acceptance_ok(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    if (!r.soft && !r.pass) return false;
  }
  return true;
}

}  // namespace bcp
