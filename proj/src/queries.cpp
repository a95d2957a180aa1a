#include "bcp/queries.hpp"

#include <stdexcept>

namespace bcp {

QueryEngine::QueryEngine(const SBRepr& sb) : sb_(&sb) {
  stamp_s_.assign(sb.n, 0);
  stamp_t_.assign(sb.n, 0);
}

bool QueryEngine::is_independent(std::span<const uint32_t> s) {
  ++epoch_;
  for (uint32_t v : s) {
    if (v >= sb_->n) throw std::invalid_argument("query: vertex out of range");
    stamp_s_[v] = epoch_;
  }
  // s is independent iff no member has a marked vertex on both sides.
  for (const Biclique& b : sb_->items) {
    bool left_hit = false;
    for (uint32_t v : b.left) {
      if (stamp_s_[v] == epoch_) {
        left_hit = true;
        break;
      }
    }
    if (!left_hit) continue;
    for (uint32_t v : b.right) {
      if (stamp_s_[v] == epoch_) return false;
    }
  }
  return true;
}

uint64_t QueryEngine::cut(std::span<const uint32_t> s, std::span<const uint32_t> t) {
  ++epoch_;
  for (uint32_t v : s) {
    if (v >= sb_->n) throw std::invalid_argument("query: vertex out of range");
    stamp_s_[v] = epoch_;
  }
  for (uint32_t v : t) {
    if (v >= sb_->n) throw std::invalid_argument("query: vertex out of range");
    if (stamp_s_[v] == epoch_) {
      throw std::invalid_argument("cut: query sets must be disjoint");
    }
    stamp_t_[v] = epoch_;
  }
  // Each member contributes |s on one side| * |t on the other|; a partition
  // covers each edge once, so the products add up to the exact cut size.
  uint64_t total = 0;
  for (const Biclique& b : sb_->items) {
    uint64_t sl = 0, tl = 0, sr = 0, tr = 0;
    for (uint32_t v : b.left) {
      sl += stamp_s_[v] == epoch_;
      tl += stamp_t_[v] == epoch_;
    }
    for (uint32_t v : b.right) {
      sr += stamp_s_[v] == epoch_;
      tr += stamp_t_[v] == epoch_;
    }
    total += sl * tr + sr * tl;
  }
  return total;
}

}  // namespace bcp
