#pragma once

#include <vector>

#include "simplex/bigint.hpp"
#include "simplex/graph.hpp"

namespace simplex {

/// Parameters of the iterated clique-expansion family.
/// q is the size of the clique glued onto every edge (q >= 1),
/// g the number of expansion rounds applied to the initial K_{q+2}.
struct FamilyParams {
  unsigned q = 1;
  unsigned g = 0;
};

/// Throws std::invalid_argument unless q >= 1.
void validate(FamilyParams p);

struct SizeGuard {
  std::size_t max_nodes = 200'000;
};

/// Edge-expansion construction. Starts from K_{q+2} (nodes 0..q+1, the hubs,
/// generation 0). Each round walks the current edge set in lexicographic
/// order and, per edge, appends q fresh nodes forming a clique joined to both
/// endpoints. Node labels are therefore fully determined by (q, g).
/// Throws SizeGuardError before allocating anything if the final node count
/// exceeds the guard.
Graph build_corona(FamilyParams p, SizeGuard guard = {});

/// Merge construction: (q+1)(q+2)/2 copies of the (g-1)-round graph, one per
/// hub pair (i,j) in lexicographic order, with copy-hubs i and j identified
/// with final hubs i and j. Produces a graph isomorphic to build_corona(p)
/// but with a different labeling; metadata carries the round at which each
/// node would appear in the edge-expansion construction.
Graph build_join(FamilyParams p, SizeGuard guard = {});

/// Closed-form edge count m^(g+1) with m = (q+1)(q+2)/2.
BigInt edge_count(FamilyParams p);

/// Closed-form node count (2 m^(g+1) + 2(q+2)) / (q+3).
BigInt node_count(FamilyParams p);

/// Nodes appended by round g: q+2 at g = 0, else q m^g.
BigInt new_node_count(FamilyParams p);

struct DegreeCensusRow {
  unsigned generation;
  BigInt degree;  // (q+1)^(g - generation + 1)
  BigInt count;
};

struct DegreeCensus {
  std::vector<DegreeCensusRow> rows;  // generations ascending, 0..g
  BigInt total_nodes() const;
  BigInt total_degree() const;  // must equal 2 * edge_count
};

/// Per-generation degree table predicted by the closed forms alone;
/// no graph is built.
DegreeCensus degree_census(FamilyParams p);

/// Hub nodes of a built family graph, ascending.
std::vector<NodeId> hub_nodes(const Graph& g);

}  // namespace simplex
