#pragma once

#include <iosfwd>

#include "simplex/family.hpp"
#include "simplex/graph.hpp"

namespace simplex {

// All writers are deterministic: identical (graph, params) give identical
// bytes. Node metadata travels implicitly; generation boundaries follow from
// (q, g), so the reader reconstructs it exactly.

/// '#'-prefixed header lines carrying q, g, N, M, then one "u v" line per
/// edge, u < v, lexicographically sorted.
void write_edgelist(std::ostream& out, const Graph& g, FamilyParams p);

struct EdgeListData {
  FamilyParams params;
  Graph graph;
};

/// Parses what write_edgelist produced; validates the header against the
/// body and restores per-node metadata from the generation cohort sizes.
EdgeListData read_edgelist(std::istream& in);

/// Undirected DOT with node labels "v<id>".
void write_dot(std::ostream& out, const Graph& g, FamilyParams p);

/// {"q","g","n","m","hubs","generation","edges"} with sorted edges.
void write_graph_json(std::ostream& out, const Graph& g, FamilyParams p);

}  // namespace simplex
