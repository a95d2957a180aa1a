#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace bcp {

// Almost-regular tournament on t players, evaluated in O(1) with no storage.
// For odd t this is the rotational tournament: i beats j iff (j - i) mod t
// lies in [1, (t-1)/2], so every player beats exactly (t-1)/2 others. For
// even t we play the odd-(t+1) tournament and drop the last player; out-
// degrees then differ by at most one (t/2 or t/2 - 1).
class Tournament {
 public:
  explicit Tournament(uint32_t t) : t_(t) {
    if (t == 0) throw std::invalid_argument("tournament needs at least one player");
    mod_ = (t % 2 == 1) ? t : t + 1;
  }

  uint32_t size() const { return t_; }

  // True iff i beats j. Irreflexive; exactly one of beats(i,j), beats(j,i)
  // holds for i != j.
  bool beats(uint32_t i, uint32_t j) const {
    if (i >= t_ || j >= t_) throw std::invalid_argument("player id out of range");
    if (i == j) return false;
    uint32_t diff = (j + mod_ - i) % mod_;
    return diff >= 1 && diff <= (mod_ - 1) / 2;
  }

  uint32_t out_degree(uint32_t i) const {
    uint32_t d = 0;
    for (uint32_t j = 0; j < t_; ++j) {
      if (beats(i, j)) ++d;
    }
    return d;
  }

 private:
  uint32_t t_;
  uint32_t mod_;
};

// Max |outdeg - indeg| over all players, by full scan; almost-regular
// means this is at most 1. O(t^2).
inline uint32_t tournament_imbalance(const Tournament& t) {
  uint32_t worst = 0;
  for (uint32_t i = 0; i < t.size(); ++i) {
    const uint32_t out = t.out_degree(i);
    const uint32_t in = t.size() - 1 - out;
    worst = std::max(worst, out > in ? out - in : in - out);
  }
  return worst;
}

}  // namespace bcp
