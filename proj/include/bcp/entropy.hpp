#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bcp {

// h2(x) = -x lg x - (1-x) lg(1-x), with h2(0) = h2(1) = 0 by continuity.
double binary_entropy(double x);

// C(x, y), saturating at cap (any value >= cap comes back as cap).
// 128-bit intermediates; exact below the cap.
uint64_t binomial_capped(uint64_t x, uint64_t y, uint64_t cap);

// Window-length limits for trace slicing. A window of length x holding y
// neighbors is acceptable while C(x, y) * r^4 < n; max_len[y] is the largest
// such x (capped at n). Acceptability of zero-neighbor windows does not
// depend on length, so it is a single flag.
struct SliceTable {
  uint32_t r = 1;
  uint64_t n = 0;
  bool unit_ok = false;             // C(x,0) = 1 acceptable, i.e. r^4 < n
  std::vector<uint64_t> max_len;    // index y in [0, r]; [0] unused
};

SliceTable build_slice_table(uint64_t n, uint32_t r);

// Table under which every window is acceptable, so each trace becomes a
// single whole-part slice. Used when n/r^4 is too small for slicing to pay
// (below sqrt(n) the per-slice bookkeeping outweighs the entropy savings).
SliceTable whole_part_slice_table(uint32_t r);

// Greedy maximal slicing of one trace. neighbor_pos holds the 1-based
// positions of a vertex's neighbors inside a part of part_len <= r elements,
// strictly increasing. Returns 1-based inclusive intervals tiling
// [1, part_len]; every interval but the last is cut exactly where the next
// extension would reach C(len, count) * r^4 >= n, and the last runs to the
// part boundary unconditionally.
struct SliceSet {
  std::vector<std::pair<uint32_t, uint32_t>> intervals;
};

SliceSet slice_trace(std::span<const uint32_t> neighbor_pos, uint32_t part_len,
                     const SliceTable& table);

}  // namespace bcp
