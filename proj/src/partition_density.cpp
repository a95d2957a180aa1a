#include "bcp/partition_density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bcp/check.hpp"
#include "bcp/entropy.hpp"
#include "bcp/partition_ep.hpp"
#include "bcp/tournament.hpp"

namespace bcp {

double density_expected_weight(uint32_t n, double gamma, uint32_t r) {
  BCP_CHECK(n >= 1 && r >= 1, "expected-weight model needs n, r >= 1");
  BCP_CHECK(gamma > 0.0 && gamma < 1.0, "expected-weight model needs 0 < gamma < 1");
  const double nn = static_cast<double>(n);
  const double parts = std::ceil(nn / r);
  const double log1mg = std::log1p(-gamma);
  const double logg = std::log(gamma);
  // A side: one id per (vertex, out-part) pair with a nonempty trace. Each
  // vertex faces (parts-1)/2 parts on average under the tournament.
  double w = nn * ((parts - 1.0) / 2.0) * -std::expm1(r * log1mg);
  // S side: a trace value with k neighbors occupies its bucket when at least
  // one of the ~n/2 in-beating vertices produces it; an occupied bucket costs
  // k ids. Summed per part over all C(r, k) values, in log space.
  const double tracers = nn / 2.0;
  for (uint32_t k = 1; k <= r; ++k) {
    const double log_choose = std::lgamma(r + 1.0) - std::lgamma(k + 1.0) -
                              std::lgamma(static_cast<double>(r - k) + 1.0);
    const double log_hit = k * logg + (r - k) * log1mg;
    const double occupied =
        -std::expm1(tracers * std::log1p(-std::exp(log_hit)));
    w += parts * k * std::exp(log_choose) * occupied;
  }
  // Within-part edges cost two ids each: 2 * gamma * C(r,2) per part.
  w += gamma * static_cast<double>(r) * (r - 1.0) * parts;
  return w;
}

uint32_t density_part_size(uint32_t n, double gamma) {
  BCP_CHECK(gamma > 0.0 && gamma < 1.0, "part-size calibration needs 0 < gamma < 1");
  if (n < 4) return 2;
  const double h2 = binary_entropy(gamma);
  const double lgn = std::log2(static_cast<double>(n));
  uint64_t r_cap = static_cast<uint64_t>(std::ceil(4.0 * (lgn + 2.0) / h2));
  r_cap = std::min<uint64_t>(n, std::max<uint64_t>(64, r_cap));
  double best_w = std::numeric_limits<double>::infinity();
  uint32_t best_r = 2;
  for (uint64_t r = 2; r <= r_cap;
       r = r < 64 ? r + 1 : std::max(r + 1, r * 5 / 4)) {
    const double w = density_expected_weight(n, gamma, static_cast<uint32_t>(r));
    if (w < best_w) {
      best_w = w;
      best_r = static_cast<uint32_t>(r);
    }
  }
  return best_r;
}

namespace {

bool slicing_pays(uint32_t n, uint32_t r) {
  // Slices are worthwhile once n / r^4 >= sqrt(n), i.e. r^8 <= n.
  unsigned __int128 p = 1;
  for (int i = 0; i < 8; ++i) p *= r;
  return p <= n;
}

}  // namespace

BicliquePartition partition_density(const Graph& g) {
  const uint32_t n = g.vertex_count();
  BicliquePartition out;
  out.n = n;
  if (g.edge_count() == 0) return out;
  if (n < 4) return partition_ep(g, EpParams{1, true});
  const Rational gamma = g.edge_density();
  if (gamma == Rational(1, 1)) return partition_ep(g, EpParams{1, true});

  const uint32_t r = std::min<uint32_t>(density_part_size(n, gamma.to_double()), n);
  const uint32_t parts = static_cast<uint32_t>((uint64_t{n} + r - 1) / r);
  const SliceTable table =
      slicing_pays(n, r) ? build_slice_table(n, r) : whole_part_slice_table(r);
  const Tournament tour(parts);

  // One bucket entry per (vertex, slice of its trace on the current part).
  // The referenced id span stays valid: it aliases the graph's CSR row.
  struct Entry {
    uint32_t v;
    uint32_t a, b;  // 1-based inclusive slice interval within the part
    const uint32_t* s;
    uint32_t s_len;
  };
  std::vector<Entry> entries;
  std::vector<uint32_t> pos;

  for (uint32_t i = 0; i < parts; ++i) {
    const uint32_t lo = i * r;
    const uint32_t hi =
        static_cast<uint32_t>(std::min<uint64_t>(uint64_t{i} * r + r, n));
    const uint32_t plen = hi - lo;
    entries.clear();
    for (uint32_t j = 0; j < parts; ++j) {
      if (j == i || !tour.beats(j, i)) continue;
      const uint32_t jlo = j * r;
      const uint32_t jhi =
          static_cast<uint32_t>(std::min<uint64_t>(uint64_t{j} * r + r, n));
      for (uint32_t v = jlo; v < jhi; ++v) {
        const std::span<const uint32_t> nb = g.neighbors_in(v, lo, hi);
        if (nb.empty()) continue;
        pos.clear();
        for (uint32_t id : nb) pos.push_back(id - lo + 1);
        const SliceSet ss = slice_trace(pos, plen, table);
        size_t q = 0;
        for (const auto& [a, b] : ss.intervals) {
          size_t q2 = q;
          while (q2 < nb.size() && nb[q2] - lo + 1 <= b) ++q2;
          if (q2 > q) {
            entries.push_back(
                {v, a, b, nb.data() + q, static_cast<uint32_t>(q2 - q)});
          }
          q = q2;
        }
        BCP_CHECK(q == nb.size(), "slice intervals must tile the trace");
      }
    }
    // Group by (interval, trace within the slice); insertion order is v
    // ascending, so stability keeps each bucket's right side sorted.
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& x, const Entry& y) {
                       if (x.a != y.a) return x.a < y.a;
                       if (x.b != y.b) return x.b < y.b;
                       return std::lexicographical_compare(
                           x.s, x.s + x.s_len, y.s, y.s + y.s_len);
                     });
    size_t k = 0;
    while (k < entries.size()) {
      const Entry& e = entries[k];
      size_t k2 = k + 1;
      while (k2 < entries.size()) {
        const Entry& f = entries[k2];
        if (f.a != e.a || f.b != e.b || f.s_len != e.s_len ||
            !std::equal(e.s, e.s + e.s_len, f.s)) {
          break;
        }
        ++k2;
      }
      Biclique b;
      b.left.assign(e.s, e.s + e.s_len);
      b.right.reserve(k2 - k);
      for (size_t q = k; q < k2; ++q) b.right.push_back(entries[q].v);
      out.items.push_back(std::move(b));
      k = k2;
    }
    for (uint32_t u = lo; u + 1 < hi; ++u) {
      for (uint32_t w : g.neighbors_in(u, u + 1, hi)) {
        out.items.push_back(Biclique{{u}, {w}});
      }
    }
  }
  return out;
}

}  // namespace bcp
