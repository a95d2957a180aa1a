#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bcp/entropy.hpp"
#include "doctest.h"

using bcp::SliceSet;
using bcp::SliceTable;

TEST_SUITE_BEGIN("entropy");

TEST_CASE("binary entropy reference values") {
  CHECK(bcp::binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bcp::binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-9));
  CHECK(bcp::binary_entropy(0.0) == 0.0);
  CHECK(bcp::binary_entropy(1.0) == 0.0);
  CHECK(bcp::binary_entropy(0.1) == doctest::Approx(bcp::binary_entropy(0.9)).epsilon(1e-12));
  CHECK_THROWS_AS(bcp::binary_entropy(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(bcp::binary_entropy(1.01), std::invalid_argument);
}

namespace {

// Exact reference binomial via Pascal's rule in unsigned 128-bit.
unsigned __int128 binom_exact(uint32_t x, uint32_t y) {
  if (y > x) return 0;
  std::vector<unsigned __int128> row(y + 1, 0);
  row[0] = 1;
  for (uint32_t i = 1; i <= x; ++i) {
    for (uint32_t j = std::min(i, y); j >= 1; --j) row[j] += row[j - 1];
  }
  return row[y];
}

}  // namespace

TEST_CASE("capped binomial is exact below the cap and saturates above") {
  for (uint32_t x = 0; x <= 40; ++x) {
    for (uint32_t y = 0; y <= 40; ++y) {
      const unsigned __int128 exact = binom_exact(x, y);
      const uint64_t cap = 1000000;
      const uint64_t got = bcp::binomial_capped(x, y, cap);
      if (exact < cap) {
        CHECK(got == static_cast<uint64_t>(exact));
      } else {
        CHECK(got == cap);
      }
    }
  }
  CHECK(bcp::binomial_capped(10000, 5000, 123456789) == 123456789);
  CHECK(bcp::binomial_capped(64, 32, ~uint64_t{0} >> 1) == 1832624140942590534ULL);
}

TEST_CASE("slice table brackets the threshold exactly") {
  for (const auto& [n, r] : std::vector<std::pair<uint64_t, uint32_t>>{
           {1u << 20, 4}, {1u << 16, 2}, {6561, 3}, {100000000, 9}}) {
    const SliceTable t = bcp::build_slice_table(n, r);
    const uint64_t r4 = uint64_t{r} * r * r * r;
    CHECK(t.unit_ok == (r4 < n));
    CHECK(t.max_len[1] == (n - 1) / r4);  // largest x with x * r^4 < n
    for (uint32_t y = 1; y <= r; ++y) {
      const uint64_t ml = t.max_len[y];
      // C(ml, y) * r^4 < n <= C(ml + 1, y) * r^4, saturating at n.
      const unsigned __int128 below = binom_exact(static_cast<uint32_t>(std::min<uint64_t>(ml, 200)), y);
      if (ml <= 200) {
        CHECK(below * r4 < n);
        if (ml < n) {
          const unsigned __int128 above = binom_exact(static_cast<uint32_t>(ml) + 1, y);
          CHECK(above * r4 >= n);
        }
      }
    }
  }
}

TEST_CASE("slicing-regime tables have nonincreasing window limits") {
  // In the active regime r^8 <= n the limits shrink as the neighbor count
  // grows; outside it near-diagonal effects can locally reverse that, which
  // the slicer tolerates (limits never grow by more than one per step).
  for (const auto& [n, r] : std::vector<std::pair<uint64_t, uint32_t>>{
           {1u << 16, 2}, {6561, 3}, {1u << 20, 4}, {100000000, 9}}) {
    unsigned __int128 r8 = 1;
    for (int i = 0; i < 8; ++i) r8 *= r;
    REQUIRE(r8 <= n);
    const SliceTable t = bcp::build_slice_table(n, r);
    for (uint32_t y = 2; y <= r; ++y) CHECK(t.max_len[y] <= t.max_len[y - 1]);
    for (uint32_t y = 1; y <= r; ++y) CHECK(t.max_len[y] >= r);  // whole parts fit
  }
}

namespace {

// Reference slicer: recompute every window acceptability from the exact
// binomial instead of the table, scanning quadratically.
SliceSet reference_slices(const std::vector<uint32_t>& pos, uint32_t part_len,
                          uint64_t n, uint32_t r) {
  const uint64_t r4 = uint64_t{r} * r * r * r;
  auto ok = [&](uint32_t a, uint32_t b) {
    uint32_t cnt = 0;
    for (uint32_t p : pos) cnt += p >= a && p <= b;
    const unsigned __int128 c = binom_exact(b - a + 1, cnt);
    return c * r4 < n;
  };
  SliceSet out;
  uint32_t a = 1;
  while (a <= part_len) {
    uint32_t b = a;
    if (!ok(a, a)) {
      out.intervals.emplace_back(a, part_len);
      return out;
    }
    while (b + 1 <= part_len && ok(a, b + 1)) ++b;
    if (b == part_len) {
      out.intervals.emplace_back(a, part_len);
      return out;
    }
    out.intervals.emplace_back(a, b);
    a = b + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("greedy slicer matches the quadratic reference on random traces") {
  std::mt19937_64 rng(2718);
  for (int iter = 0; iter < 10000; ++iter) {
    const uint32_t r = 2 + static_cast<uint32_t>(rng() % 11);  // part capacity
    // Thresholds from tight to roomy, including the active regime.
    const uint64_t n = 2 + rng() % (uint64_t{r} * r * r * r * r * r * r * r * 2);
    const uint32_t part_len = 1 + static_cast<uint32_t>(rng() % r);
    std::vector<uint32_t> pos;
    for (uint32_t q = 1; q <= part_len; ++q) {
      if (rng() % 2) pos.push_back(q);
    }
    const SliceTable t = bcp::build_slice_table(n, r);
    const SliceSet got = bcp::slice_trace(pos, part_len, t);
    const SliceSet want = reference_slices(pos, part_len, n, r);
    REQUIRE(got.intervals == want.intervals);
    // Tiling invariant.
    uint32_t next = 1;
    for (const auto& [a, b] : got.intervals) {
      CHECK(a == next);
      CHECK(b >= a);
      next = b + 1;
    }
    CHECK(next == part_len + 1);
  }
}

TEST_CASE("whole-part table yields a single slice") {
  const SliceTable t = bcp::whole_part_slice_table(6);
  const std::vector<uint32_t> pos{2, 3, 5};
  const SliceSet s = bcp::slice_trace(pos, 6, t);
  REQUIRE(s.intervals.size() == 1);
  CHECK(s.intervals[0] == std::pair<uint32_t, uint32_t>{1, 6});
}

TEST_CASE("empty part yields no slices") {
  const SliceTable t = bcp::whole_part_slice_table(4);
  CHECK(bcp::slice_trace({}, 0, t).intervals.empty());
}

TEST_SUITE_END();
