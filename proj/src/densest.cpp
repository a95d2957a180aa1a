#include "bcp/densest.hpp"

#include <stdexcept>

#include "bcp/check.hpp"

namespace bcp {

DensestResult densest_approx(CBRepr cb, double alpha) {
  if (!(alpha > 1.0)) {
    throw std::invalid_argument("densest: alpha must exceed 1");
  }
  DensestResult res;
  res.density = Rational(0, 1);
  const uint32_t n = cb.vertex_count();
  std::vector<uint64_t> degs;
  double t = 1.0;
  while (cb.live_count() > 0) {
    res.rounds++;
    res.thresholds.push_back(t);
    cb.degrees_all(degs);
    uint64_t degsum = 0;
    for (uint32_t v = 0; v < n; ++v) degsum += degs[v];
    // Handshake: degsum = 2 |E[live]|, so this is the exact live density.
    const Rational cur(degsum, 2 * cb.live_count());
    if (cur > res.density) {
      res.density = cur;
      res.vertices.clear();
      for (uint32_t v = 0; v < n; ++v) {
        if (!cb.removed(v)) res.vertices.push_back(v);
      }
    }
    for (uint32_t v = 0; v < n; ++v) {
      if (!cb.removed(v) && static_cast<double>(degs[v]) < t) cb.lazy_remove(v);
    }
    t *= alpha;
  }
  BCP_CHECK(res.density.num == 0 || !res.vertices.empty(),
            "positive density needs a nonempty witness");
  return res;
}

}  // namespace bcp
