#pragma once

#include <utility>
#include <vector>

#include "simplex/bigint.hpp"
#include "simplex/closed_form.hpp"
#include "simplex/graph.hpp"

namespace simplex {

/// Hard ceilings for the exhaustive oracles. Exceeding one raises
/// BudgetError; a partial answer is never returned.
struct OracleBudget {
  std::size_t max_nodes = 64;
  std::size_t max_edges = 24;        // caps 2^m orientation sweeps
  std::size_t max_steps = 50'000'000;
};

// Exhaustive or algebraic counterparts of the closed forms. All of them work
// on arbitrary graphs and share no code with the formula side beyond the
// exact-integer types.

/// Branch and bound with a greedy clique-cover bound.
BigInt max_independent_set(const Graph& g, const OracleBudget& budget = {});

/// Branch and bound over who dominates the most constrained vertex;
/// disjoint-closed-neighborhood packing gives the lower bound.
BigInt min_dominating_set(const Graph& g, const OracleBudget& budget = {});

/// Exhaustive proper-coloring count over a degeneracy order (colors <= 64).
BigInt count_proper_colorings(const Graph& g, unsigned colors,
                              const OracleBudget& budget = {});

/// Decision form: stops at the first proper coloring.
bool has_proper_coloring(const Graph& g, unsigned colors,
                         const OracleBudget& budget = {});

/// Chromatic polynomial by deletion-contraction, memoized on canonical
/// forms. Coefficients ascending by power; size node_count()+1.
std::vector<BigInt> chromatic_polynomial_dc(const Graph& g,
                                            const OracleBudget& budget = {});

/// Enumerates all 2^m orientations and keeps the acyclic ones.
BigInt count_acyclic_orientations(const Graph& g,
                                  const OracleBudget& budget = {});

/// Acyclic orientations in which every node reaches `root`.
BigInt count_root_connected_acyclic(const Graph& g, NodeId root,
                                    const OracleBudget& budget = {});

/// Backtracking on the lowest uncovered node. Odd node count gives 0.
BigInt count_perfect_matchings(const Graph& g,
                               const OracleBudget& budget = {});

/// (matchings covering everything but {h1, h2}, perfect matchings).
MatchingProfile matching_profile_oracle(const Graph& g, NodeId h1, NodeId h2,
                                        const OracleBudget& budget = {});

/// Matrix-tree count via fraction-free (Bareiss) elimination of a Laplacian
/// minor. Exact at any size that fits the internal node ceiling (3000);
/// disconnected input returns 0.
BigInt count_spanning_trees_mt(const Graph& g);

/// Spanning trees through a given edge: ST(G) - ST(G - e) when G - e stays
/// connected, else ST of the contraction (weighted Laplacian).
BigInt count_spanning_trees_containing_edge(const Graph& g, NodeId u,
                                            NodeId v);

/// Label-invariant edge list: minimum adjacency matrix over the refinement
/// search tree. Two graphs are isomorphic iff their canonical forms match.
std::vector<std::pair<NodeId, NodeId>> canonical_form(
    const Graph& g, const OracleBudget& budget = {});

bool isomorphic(const Graph& a, const Graph& b,
                const OracleBudget& budget = {});

}  // namespace simplex
