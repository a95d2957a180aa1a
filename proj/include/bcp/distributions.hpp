#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bcp {

// All weak compositions of d into d - 1 ordered nonnegative parts, in
// lexicographic order. These are the ways a d-edge can distribute over d - 1
// vertex classes. Count: C(2d - 2, d - 2). Requires d >= 2.
std::vector<std::vector<uint32_t>> enumerate_distributions(uint32_t d);

// Exact d! / prod(x_i!) for a composition of d. Requires d <= 20 (fits u64).
uint64_t multinomial(uint32_t d, std::span<const uint32_t> x);

// Exact check that the multinomial masses of all distributions sum to
// (d - 1)^d.
bool multinomial_identity_ok(uint32_t d);

// Assignment of every distribution to a target class index f(x) with
// x[f(x)] >= 2, equitable in the sense that each class index receives total
// multinomial mass exactly (d - 1)^(d - 1). Built by grouping distributions
// into cyclic-rotation classes (each has d - 1 distinct members: a shorter
// period q would force (d - 1) | d * q, impossible below d - 1 since d and
// d - 1 are coprime), picking as representative the lexicographically least
// rotation whose first entry is >= 2 (one entry is >= 2 by pigeonhole), and
// sending rotation k of the representative to the position its >= 2 entry
// lands on: (d - 1 - k) mod (d - 1).
struct SelectionStrategy {
  uint32_t d = 2;
  std::vector<std::vector<uint32_t>> dists;  // lexicographic order
  std::vector<uint32_t> assign;              // f per distribution, 0-based class

  // Index of x in dists (binary search); throws std::invalid_argument if x is
  // not a valid distribution for d.
  uint32_t index_of(std::span<const uint32_t> x) const;
};

SelectionStrategy make_equitable_strategy(uint32_t d);

}  // namespace bcp
