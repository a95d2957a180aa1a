#pragma once

#include <cstdint>

// Checked-in acceptance tolerances. The suite reads every band from here, so
// tightening one is a one-line diff reviewed like any other code change.
namespace bcp::bands {

// 1: exactness sweep — every partitioner verifies on every seeded instance.
inline constexpr int kExactnessMinInstances = 300;
inline constexpr double kExactnessBudgetSeconds = 600.0;

// 3: partition weight on G(n, 1/2), ratio = w ln(n) / n^2. The asymptotic
// constant is not reachable at desk scale; the band plus the monotone-trend
// requirement across n = 2^12..2^16 is the reproducible surrogate.
inline constexpr uint32_t kWeightTrendKLo = 12;
inline constexpr uint32_t kWeightTrendKHi = 16;
inline constexpr double kWeightTrendLo = 0.50;
inline constexpr double kWeightTrendHi = 0.85;

// 4: density-adapted weight on G(n, m) at n = 2^14,
// ratio = w ln(n) / (h2(gamma) n^2), plus head-to-head weight wins.
inline constexpr uint32_t kDensityTrendN = 1u << 14;
inline constexpr double kDensityTrendLo = 0.35;
inline constexpr double kDensityTrendHi = 0.80;
inline constexpr double kDensityBandGammas[] = {0.05, 0.10, 0.25};
inline constexpr double kDensityBeatGammas[] = {0.05, 0.10, 0.80};

// 7: densest-subgraph guarantee delta >= delta* / (2 alpha), exact rational
// comparison; 2 alpha values kept integral so the check stays exact.
inline constexpr uint32_t kDensestMaxN = 14;
inline constexpr uint32_t kDensestPerSize = 500;
inline constexpr double kDensestAlphas[] = {1.5, 2.0, 4.0};
inline constexpr uint64_t kDensestTwoAlphas[] = {3, 4, 8};

// 8: balanced-order floor for the top-degree finder on G(2^13, 1/2).
inline constexpr uint32_t kFinderN = 1u << 13;
inline constexpr uint32_t kFinderFloor = 4;

// 10 (soft, warn-only): wall-clock scaling ratios.
//   quadratic partitioner, time(n) / time(n/2)
inline constexpr double kEpTimeRatioLo = 3.0;
inline constexpr double kEpTimeRatioHi = 5.5;
//   density partitioner, time(2m) / time(m) at fixed n (linear in m, +-35%)
inline constexpr double kDensityTimeRatioLo = 1.3;
inline constexpr double kDensityTimeRatioHi = 2.7;
//   peeling, time(alpha = 4) / time(alpha = 2) (halved rounds, +-40%)
inline constexpr double kDensestTimeRatioLo = 0.3;
inline constexpr double kDensestTimeRatioHi = 0.7;

}  // namespace bcp::bands
