#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bcp/partition.hpp"

namespace bcp {

// Bits needed to name one of n vertices: bit width of n - 1 (0 for n <= 1).
uint32_t ceil_lg(uint32_t n);

// Succinct representation: the partition itself stored as length-prefixed id
// lists. Its information content is weight * ceil_lg(n) id bits; the byte
// serialization below is the interchange format.
struct SBRepr {
  uint32_t n = 0;
  std::vector<Biclique> items;

  uint64_t weight() const;
  uint64_t member_count() const { return items.size(); }
  // weight() * ceil_lg(n): the id-bit account the compact layer adds to.
  uint64_t id_bits() const;
};

SBRepr build_sb(const BicliquePartition& p);

// Byte layout "SBP1", u32 n, u32 k, then per member u32 left-size, u32
// right-size, left ids, right ids, all u32 little-endian.
std::vector<uint8_t> serialize_sb(const SBRepr& sb);

// Strict parse: magic, exact length, ids < n, sides sorted strictly
// increasing and nonempty. Throws std::invalid_argument on any violation.
SBRepr parse_sb(std::span<const uint8_t> bytes);

// All covered pairs (u < v), sorted. For a valid partition this is the exact
// edge set of the source graph.
std::vector<std::pair<uint32_t, uint32_t>> decode_edges(const SBRepr& sb);

// Compact representation: SB plus per-vertex incidence (member index, side)
// and live side counts, supporting degree reads and lazy vertex removal in
// time proportional to the vertex's load. Copyable; a copy is independent.
class CBRepr {
 public:
  explicit CBRepr(const SBRepr& sb);

  uint32_t vertex_count() const { return sb_.n; }
  uint64_t weight() const { return sb_.weight(); }
  const SBRepr& sb() const { return sb_; }

  // Degree of v in the graph induced on live vertices; 0 if v was removed.
  uint64_t degree(uint32_t v) const;
  void degrees_all(std::vector<uint64_t>& out) const;

  bool removed(uint32_t v) const;
  uint64_t live_count() const { return live_vertices_; }

  // Marks v removed and decrements its members' live side counts. Removing a
  // vertex twice is a caller bug: std::logic_error.
  void lazy_remove(uint32_t v);

  // Incidence bits on top of the SB id bits: each of the weight() incidence
  // entries names a member and a side, 2 * ceil_lg(n) + 1 bits.
  uint64_t extra_bits() const;

 private:
  SBRepr sb_;
  // Flat incidence, CSR over vertices; side 0 = left, 1 = right.
  std::vector<uint64_t> inc_off_;
  std::vector<std::pair<uint32_t, uint8_t>> inc_;
  std::vector<uint32_t> live_left_, live_right_;
  std::vector<uint8_t> removed_;
  uint64_t live_vertices_ = 0;
};

}  // namespace bcp
