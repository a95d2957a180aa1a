#include "bcp/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "bcp/check.hpp"

namespace bcp {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("entropy argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

uint64_t binomial_capped(uint64_t x, uint64_t y, uint64_t cap) {
  if (y > x) return 0;
  if (y > x - y) y = x - y;
  unsigned __int128 c = 1;
  for (uint64_t i = 1; i <= y; ++i) {
    // c is C(x-y+i-1, i-1) here; the product below stays integral.
    c = c * (x - y + i) / i;
    if (c >= cap) return cap;
  }
  return static_cast<uint64_t>(c);
}

namespace {

// C(x, y) * r^4 < n, with saturation making the comparison safe.
bool window_ok(uint64_t x, uint64_t y, uint64_t n, unsigned __int128 r4) {
  const uint64_t c = binomial_capped(x, y, n);
  return static_cast<unsigned __int128>(c) * r4 < n;
}

}  // namespace

SliceTable build_slice_table(uint64_t n, uint32_t r) {
  if (r < 1) throw std::invalid_argument("slice table needs r >= 1");
  SliceTable t;
  t.r = r;
  t.n = n;
  const unsigned __int128 r4 = static_cast<unsigned __int128>(r) * r * r * r;
  t.unit_ok = r4 < n;
  t.max_len.assign(static_cast<size_t>(r) + 1, 0);
  for (uint32_t y = 1; y <= r; ++y) {
    // Largest x <= n with C(x,y)*r^4 < n; C is increasing in x at fixed y.
    uint64_t lo = 0, hi = n;  // window_ok holds at lo (C(0,y)=0), unknown at hi
    while (lo < hi) {
      const uint64_t mid = lo + (hi - lo + 1) / 2;
      if (window_ok(mid, y, n, r4)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    t.max_len[y] = lo;
  }
  return t;
}

SliceTable whole_part_slice_table(uint32_t r) {
  if (r < 1) throw std::invalid_argument("slice table needs r >= 1");
  SliceTable t;
  t.r = r;
  t.n = 0;
  t.unit_ok = true;
  t.max_len.assign(static_cast<size_t>(r) + 1, ~uint64_t{0});
  return t;
}

SliceSet slice_trace(std::span<const uint32_t> neighbor_pos, uint32_t part_len,
                     const SliceTable& table) {
  BCP_CHECK(part_len <= table.r, "part longer than slice table's r");
  SliceSet out;
  if (part_len == 0) return out;
  uint32_t a = 1;
  size_t k = 0;  // first neighbor position >= a
  while (true) {
    // Extend [a, b] while C(b-a+1, count)*r^4 < n. Count only grows and
    // max_len only shrinks with it, so acceptability is a prefix in b.
    uint32_t b = a - 1;
    uint32_t cnt = 0;
    size_t kk = k;
    while (b < part_len) {
      const uint32_t nb = b + 1;
      const bool is_neighbor = kk < neighbor_pos.size() && neighbor_pos[kk] == nb;
      const uint32_t ncnt = cnt + (is_neighbor ? 1 : 0);
      const bool ok = ncnt == 0 ? table.unit_ok : (uint64_t{nb} - a + 1) <= table.max_len[ncnt];
      if (!ok) break;
      b = nb;
      cnt = ncnt;
      if (is_neighbor) ++kk;
    }
    if (b < a || b == part_len) {
      // Reached the boundary, or even the minimal window failed: the rest of
      // the part is the final slice, exempt from the length rule.
      out.intervals.emplace_back(a, part_len);
      return out;
    }
    out.intervals.emplace_back(a, b);
    a = b + 1;
    k = kk;
  }
}

}  // namespace bcp
