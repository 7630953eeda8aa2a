#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace simplex {

using NodeId = std::uint32_t;

struct NodeMeta {
  std::uint32_t generation = 0;
  bool is_hub = false;

  friend bool operator==(const NodeMeta&, const NodeMeta&) = default;
};

class Graph;

/// Mutable accumulator for building a simple undirected graph.
/// Self-loops and duplicate edges are rejected eagerly: during family
/// construction a duplicate insertion always means a construction bug,
/// so it must fail at the insertion site rather than be silently merged.
class GraphBuilder {
public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t node_count, NodeMeta meta = {});

  NodeId add_node(NodeMeta meta = {});
  void set_meta(NodeId v, NodeMeta meta);
  void add_edge(NodeId u, NodeId v);
  bool has_edge(NodeId u, NodeId v) const;

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Sorts the adjacency lists and yields the immutable graph.
  /// The builder is consumed.
  Graph freeze() &&;

private:
  void check_node(NodeId v, const char* op) const;

  std::vector<std::vector<NodeId>> adj_;
  std::vector<NodeMeta> meta_;
  std::unordered_set<std::uint64_t> edge_keys_;
  std::size_t edge_count_ = 0;
};

/// Immutable simple undirected graph with per-node metadata.
/// Neighbor lists are sorted ascending, so every traversal that walks them
/// in order is deterministic. Const access is safe to share across threads.
class Graph {
public:
  Graph() = default;

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;
  const NodeMeta& meta(NodeId v) const;

  /// All edges as (min,max) pairs in lexicographic order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  /// Degrees sorted ascending.
  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph&, const Graph&);

private:
  friend class GraphBuilder;

  std::vector<std::vector<NodeId>> adj_;
  std::vector<NodeMeta> meta_;
  std::size_t edge_count_ = 0;
};

std::size_t component_count(const Graph& g);

struct RankNullity {
  std::size_t rank;     // n - components
  std::size_t nullity;  // m - rank
};
RankNullity rank_nullity(const Graph& g);

std::size_t triangle_count(const Graph& g);

/// Subgraph induced by `keep` (must be sorted ascending, distinct, in range).
/// Node ids are compacted to 0..keep.size()-1 preserving order; metadata is
/// carried over.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

/// Copy of g without edge (u,v); the edge must exist.
Graph with_edge_removed(const Graph& g, NodeId u, NodeId v);

}  // namespace simplex
