#pragma once

#include <iosfwd>
#include <vector>

#include "bcp/graph.hpp"
#include "bcp/partition.hpp"
#include "bcp/representation.hpp"

namespace bcp {

// Whitespace-separated text formats. Graphs: "n m" then m lines "u v".
// Digraphs use the same layout read as arcs. Hypergraphs: "d n m" then m
// lines of d ascending ids. Partitions: "bp n k" then per member
// "lsize rsize  left-ids  right-ids"; d-clique partitions: "dp d n k" then
// per member its d part sizes followed by the parts' ids. All parsers
// throw std::invalid_argument on malformed input, including trailing
// content after the object.

Graph parse_graph(std::istream& in);
void serialize_graph(const Graph& g, std::ostream& out);

Digraph parse_digraph(std::istream& in);
void serialize_digraph(const Digraph& g, std::ostream& out);

Hypergraph parse_hypergraph(std::istream& in);
void serialize_hypergraph(const Hypergraph& h, std::ostream& out);

BicliquePartition parse_partition(std::istream& in);
void serialize_partition(const BicliquePartition& p, std::ostream& out);

DCliquePartition parse_dpartition(std::istream& in);
void serialize_dpartition(const DCliquePartition& p, std::ostream& out);

// One id per whitespace-separated token, until end of stream.
std::vector<uint32_t> parse_vertex_set(std::istream& in);

}  // namespace bcp
