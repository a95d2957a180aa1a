#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bcp/representation.hpp"

namespace bcp {

// Set queries against a partitioned edge set. Time is O(weight + |query|)
// per call: each member is scanned once and vertex membership is tested with
// epoch-stamped scratch arrays, so consecutive queries pay no clearing cost.
// One engine serves one SBRepr; the engine holds mutable scratch, so share
// it across threads only with external locking.
class QueryEngine {
 public:
  explicit QueryEngine(const SBRepr& sb);

  // True iff no covered edge has both endpoints in s. Duplicate ids in s are
  // allowed; out-of-range ids throw std::invalid_argument.
  bool is_independent(std::span<const uint32_t> s);

  // Number of covered edges with one endpoint in s and the other in t.
  // s and t must be disjoint: std::invalid_argument otherwise.
  uint64_t cut(std::span<const uint32_t> s, std::span<const uint32_t> t);

 private:
  const SBRepr* sb_;
  std::vector<uint64_t> stamp_s_, stamp_t_;
  uint64_t epoch_ = 0;
};

}  // namespace bcp
