#include "bcp/partition.hpp"

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>

namespace bcp {
namespace {

bool sorted_unique(const std::vector<uint32_t>& v) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) return false;
  }
  return true;
}

VerifyResult fail(std::string msg) { return {false, std::move(msg)}; }

std::string member_tag(size_t i) { return "member " + std::to_string(i); }

// Triangular pair index for u < v.
inline uint64_t tri_index(uint64_t n, uint64_t u, uint64_t v) {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

class PairSet {
 public:
  PairSet(uint32_t n, bool dense) : n_(n), dense_(dense) {
    if (dense_) bits_.assign((uint64_t{n_} * (n_ - 1) / 2 + 63) / 64, 0);
  }
  // Returns false if already present.
  bool insert(uint32_t u, uint32_t v) {
    if (u > v) std::swap(u, v);
    if (dense_) {
      uint64_t i = tri_index(n_, u, v);
      uint64_t word = i >> 6, bit = uint64_t{1} << (i & 63);
      if (bits_[word] & bit) return false;
      bits_[word] |= bit;
      return true;
    }
    return set_.insert((uint64_t{u} << 32) | v).second;
  }
  bool contains(uint32_t u, uint32_t v) const {
    if (u > v) std::swap(u, v);
    if (dense_) {
      uint64_t i = tri_index(n_, u, v);
      return (bits_[i >> 6] >> (i & 63)) & 1;
    }
    return set_.count((uint64_t{u} << 32) | v) != 0;
  }

 private:
  uint32_t n_;
  bool dense_;
  std::vector<uint64_t> bits_;
  std::unordered_set<uint64_t> set_;
};

}  // namespace

uint64_t weight(const BicliquePartition& p) {
  uint64_t w = 0;
  for (const auto& b : p.items) w += b.left.size() + b.right.size();
  return w;
}

uint64_t weight(const DCliquePartition& p) {
  uint64_t w = 0;
  for (const auto& c : p.items) {
    for (const auto& part : c.parts) w += part.size();
  }
  return w;
}

std::vector<uint32_t> loads(const BicliquePartition& p) {
  std::vector<uint32_t> l(p.n, 0);
  for (const auto& b : p.items) {
    for (uint32_t v : b.left) l[v]++;
    for (uint32_t v : b.right) l[v]++;
  }
  return l;
}

std::vector<uint32_t> loads(const DCliquePartition& p) {
  std::vector<uint32_t> l(p.n, 0);
  for (const auto& c : p.items) {
    for (const auto& part : c.parts) {
      for (uint32_t v : part) l[v]++;
    }
  }
  return l;
}

uint32_t max_load(const BicliquePartition& p) {
  auto l = loads(p);
  return l.empty() ? 0 : *std::max_element(l.begin(), l.end());
}

uint32_t max_load(const DCliquePartition& p) {
  auto l = loads(p);
  return l.empty() ? 0 : *std::max_element(l.begin(), l.end());
}

VerifyResult verify_partition(const Graph& g, const BicliquePartition& p) {
  const uint32_t n = g.vertex_count();
  if (p.n != n) return fail("partition host size mismatch");
  const bool dense = n <= (uint32_t{1} << 16);
  PairSet edges(n, dense);
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v : g.neighbors(u)) {
      if (u < v) edges.insert(u, v);
    }
  }
  PairSet covered(n, dense);
  uint64_t covered_count = 0;
  for (size_t i = 0; i < p.items.size(); ++i) {
    const auto& b = p.items[i];
    if (b.left.empty() || b.right.empty()) return fail(member_tag(i) + ": empty side");
    if (!sorted_unique(b.left) || !sorted_unique(b.right)) {
      return fail(member_tag(i) + ": side not sorted/unique");
    }
    if (b.left.back() >= n || b.right.back() >= n) return fail(member_tag(i) + ": id out of range");
    for (uint32_t u : b.left) {
      for (uint32_t v : b.right) {
        if (u == v) return fail(member_tag(i) + ": sides intersect at " + std::to_string(u));
        if (!edges.contains(u, v)) {
          return fail(member_tag(i) + ": pair (" + std::to_string(u) + "," + std::to_string(v) +
                      ") is not an edge");
        }
        if (!covered.insert(u, v)) {
          return fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") covered twice");
        }
        covered_count++;
      }
    }
  }
  if (covered_count != g.edge_count()) {
    return fail("covered " + std::to_string(covered_count) + " of " +
                std::to_string(g.edge_count()) + " edges");
  }
  return {};
}

VerifyResult verify_directed_partition(const Digraph& g, const BicliquePartition& p) {
  const uint32_t n = g.vertex_count();
  if (p.n != n) return fail("partition host size mismatch");
  std::unordered_set<uint64_t> covered;
  covered.reserve(g.arc_count() * 2);
  uint64_t covered_count = 0;
  for (size_t i = 0; i < p.items.size(); ++i) {
    const auto& b = p.items[i];
    if (b.left.empty() || b.right.empty()) return fail(member_tag(i) + ": empty side");
    if (!sorted_unique(b.left) || !sorted_unique(b.right)) {
      return fail(member_tag(i) + ": side not sorted/unique");
    }
    if (b.left.back() >= n || b.right.back() >= n) return fail(member_tag(i) + ": id out of range");
    for (uint32_t u : b.left) {
      for (uint32_t v : b.right) {
        if (u == v) return fail(member_tag(i) + ": sides intersect at " + std::to_string(u));
        if (!g.has_arc(u, v)) {
          return fail(member_tag(i) + ": pair (" + std::to_string(u) + "," + std::to_string(v) +
                      ") is not an arc");
        }
        if (!covered.insert((uint64_t{u} << 32) | v).second) {
          return fail("arc (" + std::to_string(u) + "," + std::to_string(v) + ") covered twice");
        }
        covered_count++;
      }
    }
  }
  if (covered_count != g.arc_count()) {
    return fail("covered " + std::to_string(covered_count) + " of " +
                std::to_string(g.arc_count()) + " arcs");
  }
  return {};
}

namespace {

// Hash table over d-sets encoded as byte strings (ids are < 2^32).
struct EdgeKey {
  static std::string make(std::span<const uint32_t> ids) {
    std::string s(ids.size() * 4, '\0');
    for (size_t i = 0; i < ids.size(); ++i) {
      uint32_t v = ids[i];
      s[4 * i + 0] = static_cast<char>(v & 0xff);
      s[4 * i + 1] = static_cast<char>((v >> 8) & 0xff);
      s[4 * i + 2] = static_cast<char>((v >> 16) & 0xff);
      s[4 * i + 3] = static_cast<char>((v >> 24) & 0xff);
    }
    return s;
  }
};

// Enumerates the product of a member's parts as sorted d-sets.
bool for_each_product(const DClique& c, std::vector<uint32_t>& pick,
                      const std::function<bool(const std::vector<uint32_t>&)>& fn,
                      std::vector<uint32_t>& scratch, size_t depth) {
  if (depth == c.parts.size()) {
    scratch = pick;
    std::sort(scratch.begin(), scratch.end());
    return fn(scratch);
  }
  for (uint32_t v : c.parts[depth]) {
    pick[depth] = v;
    if (!for_each_product(c, pick, fn, scratch, depth + 1)) return false;
  }
  return true;
}

}  // namespace

VerifyResult verify_dpartition(const Hypergraph& h, const DCliquePartition& p) {
  const uint32_t n = h.vertex_count();
  const uint32_t d = h.uniformity();
  if (p.n != n) return fail("partition host size mismatch");
  if (p.d != d) return fail("partition uniformity mismatch");
  std::unordered_set<std::string> edges;
  edges.reserve(h.edge_count() * 2);
  for (uint64_t i = 0; i < h.edge_count(); ++i) edges.insert(EdgeKey::make(h.edge(i)));
  std::unordered_set<std::string> covered;
  covered.reserve(h.edge_count() * 2);
  uint64_t covered_count = 0;
  for (size_t i = 0; i < p.items.size(); ++i) {
    const auto& c = p.items[i];
    if (c.parts.size() != d) return fail(member_tag(i) + ": wrong part count");
    std::vector<uint32_t> seen;
    for (const auto& part : c.parts) {
      if (part.empty()) return fail(member_tag(i) + ": empty part");
      if (!sorted_unique(part)) return fail(member_tag(i) + ": part not sorted/unique");
      if (part.back() >= n) return fail(member_tag(i) + ": id out of range");
      seen.insert(seen.end(), part.begin(), part.end());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      return fail(member_tag(i) + ": parts intersect");
    }
    std::vector<uint32_t> pick(d), scratch;
    std::string bad;
    bool ok = for_each_product(
        c, pick,
        [&](const std::vector<uint32_t>& e) {
          auto key = EdgeKey::make(e);
          if (!edges.count(key)) {
            bad = member_tag(i) + ": product tuple is not an edge";
            return false;
          }
          if (!covered.insert(key).second) {
            bad = "edge covered twice";
            return false;
          }
          covered_count++;
          return true;
        },
        scratch, 0);
    if (!ok) return fail(bad);
  }
  if (covered_count != h.edge_count()) {
    return fail("covered " + std::to_string(covered_count) + " of " +
                std::to_string(h.edge_count()) + " edges");
  }
  return {};
}

}  // namespace bcp
