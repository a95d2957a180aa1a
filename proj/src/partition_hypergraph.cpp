#include "bcp/partition_hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "bcp/check.hpp"
#include "bcp/distributions.hpp"
#include "bcp/partition_ep.hpp"

namespace bcp {

namespace {

// d = 2 base case shared by both partitioners: run the graph partitioner and
// reread its bicliques as 2-part cliques.
DCliquePartition pairs_base(uint32_t n,
                            const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  Graph g(n, pairs);
  BicliquePartition p = partition_ep(g);
  DCliquePartition out;
  out.n = n;
  out.d = 2;
  out.items.reserve(p.items.size());
  for (Biclique& b : p.items) {
    out.items.push_back(DClique{{std::move(b.left), std::move(b.right)}});
  }
  return out;
}

std::vector<std::pair<uint32_t, uint32_t>> edges_as_pairs(const Hypergraph& h) {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  pairs.reserve(h.edge_count());
  for (uint64_t i = 0; i < h.edge_count(); ++i) {
    const auto e = h.edge(i);
    pairs.emplace_back(e[0], e[1]);
  }
  return pairs;
}

}  // namespace

DCliquePartition partition_stepup(const Hypergraph& h) {
  const uint32_t d = h.uniformity();
  const uint32_t n = h.vertex_count();
  DCliquePartition out;
  out.n = n;
  out.d = d;
  if (h.edge_count() == 0) return out;
  if (d == 2) return pairs_base(n, edges_as_pairs(h));

  // Links keyed by least vertex; suffixes stay strictly increasing and
  // distinct, and only use ids above the key.
  std::vector<std::vector<std::vector<uint32_t>>> links(n);
  for (uint64_t i = 0; i < h.edge_count(); ++i) {
    const auto e = h.edge(i);
    links[e[0]].emplace_back(e.begin() + 1, e.end());
  }
  for (uint32_t v0 = 0; v0 < n; ++v0) {
    if (links[v0].empty()) continue;
    const Hypergraph link(n, d - 1, links[v0]);
    DCliquePartition sub = partition_stepup(link);
    for (DClique& c : sub.items) {
      DClique dc;
      dc.parts.reserve(d);
      dc.parts.push_back({v0});
      for (auto& part : c.parts) dc.parts.push_back(std::move(part));
      out.items.push_back(std::move(dc));
    }
  }
  return out;
}

DCliquePartition partition_equitable(const Hypergraph& h) {
  const uint32_t d = h.uniformity();
  const uint32_t n = h.vertex_count();
  DCliquePartition out;
  out.n = n;
  out.d = d;
  if (h.edge_count() == 0) return out;
  if (d == 2) return pairs_base(n, edges_as_pairs(h));

  const uint32_t len = d - 1;  // class count; class of v is v mod len
  const SelectionStrategy strategy = make_equitable_strategy(d);

  struct Item {
    uint32_t dist;                  // distribution index in strategy order
    std::vector<uint32_t> sel;      // edge vertices outside the target class
    std::vector<uint32_t> res;      // edge vertices inside the target class
  };
  std::vector<Item> items;
  items.reserve(h.edge_count());
  std::vector<uint32_t> counts(len);
  for (uint64_t i = 0; i < h.edge_count(); ++i) {
    const auto e = h.edge(i);
    std::fill(counts.begin(), counts.end(), 0);
    for (uint32_t v : e) counts[v % len]++;
    const uint32_t dist = strategy.index_of(counts);
    const uint32_t target = strategy.assign[dist];
    Item it;
    it.dist = dist;
    for (uint32_t v : e) (v % len == target ? it.res : it.sel).push_back(v);
    items.push_back(std::move(it));
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.sel != b.sel) return a.sel < b.sel;
    return a.res < b.res;
  });

  std::vector<std::vector<uint32_t>> link_edges;
  for (size_t k = 0; k < items.size();) {
    size_t k2 = k;
    while (k2 < items.size() && items[k2].dist == items[k].dist &&
           items[k2].sel == items[k].sel) {
      ++k2;
    }
    const uint32_t target = strategy.assign[items[k].dist];
    const uint32_t inside = d - static_cast<uint32_t>(items[k].sel.size());
    // Class vertices are {target, target + len, ...}; rank() compresses them.
    const uint32_t class_n = n > target ? (n - target + len - 1) / len : 0;
    link_edges.clear();
    for (size_t q = k; q < k2; ++q) {
      std::vector<uint32_t> t;
      t.reserve(inside);
      for (uint32_t v : items[q].res) t.push_back((v - target) / len);
      link_edges.push_back(std::move(t));
    }
    DCliquePartition sub;
    if (inside == 2) {
      std::vector<std::pair<uint32_t, uint32_t>> pairs;
      pairs.reserve(link_edges.size());
      for (const auto& t : link_edges) pairs.emplace_back(t[0], t[1]);
      sub = pairs_base(class_n, pairs);
    } else {
      // inside == d recurses on the strictly smaller class; inside < d drops
      // uniformity. Either way the recursion is well founded.
      sub = partition_equitable(Hypergraph(class_n, inside, link_edges));
    }
    for (DClique& c : sub.items) {
      DClique dc;
      dc.parts.reserve(d);
      for (uint32_t v : items[k].sel) dc.parts.push_back({v});
      for (auto& part : c.parts) {
        for (uint32_t& v : part) v = target + v * len;
        dc.parts.push_back(std::move(part));
      }
      BCP_CHECK(dc.parts.size() == d, "clique part count must equal uniformity");
      out.items.push_back(std::move(dc));
    }
    k = k2;
  }
  return out;
}

}  // namespace bcp
