#include "simplex/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace simplex {

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

GraphBuilder::GraphBuilder(std::size_t node_count, NodeMeta meta)
    : adj_(node_count), meta_(node_count, meta) {}

void GraphBuilder::check_node(NodeId v, const char* op) const {
  if (v >= adj_.size()) {
    throw std::out_of_range(std::string(op) + ": node " + std::to_string(v) +
                            " out of range (node count " +
                            std::to_string(adj_.size()) + ")");
  }
}

NodeId GraphBuilder::add_node(NodeMeta meta) {
  adj_.emplace_back();
  meta_.push_back(meta);
  return static_cast<NodeId>(adj_.size() - 1);
}

void GraphBuilder::set_meta(NodeId v, NodeMeta meta) {
  check_node(v, "set_meta");
  meta_[v] = meta;
}

void GraphBuilder::add_edge(NodeId u, NodeId v) {
  check_node(u, "add_edge");
  check_node(v, "add_edge");
  if (u == v) {
    throw std::invalid_argument("add_edge: self-loop at node " +
                                std::to_string(u));
  }
  if (!edge_keys_.insert(edge_key(u, v)).second) {
    throw std::invalid_argument("add_edge: duplicate edge (" +
                                std::to_string(u) + "," + std::to_string(v) +
                                ")");
  }
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++edge_count_;
}

bool GraphBuilder::has_edge(NodeId u, NodeId v) const {
  check_node(u, "has_edge");
  check_node(v, "has_edge");
  return edge_keys_.count(edge_key(u, v)) != 0;
}

Graph GraphBuilder::freeze() && {
  Graph g;
  g.adj_ = std::move(adj_);
  g.meta_ = std::move(meta_);
  g.edge_count_ = edge_count_;
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  if (v >= adj_.size()) {
    throw std::out_of_range("neighbors: node " + std::to_string(v) +
                            " out of range");
  }
  return adj_[v];
}

std::size_t Graph::degree(NodeId v) const { return neighbors(v).size(); }

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw std::out_of_range("has_edge: node out of range");
  }
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  NodeId target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

const NodeMeta& Graph::meta(NodeId v) const {
  if (v >= meta_.size()) {
    throw std::out_of_range("meta: node " + std::to_string(v) +
                            " out of range");
  }
  return meta_[v];
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adj_.size(); ++u) {
    for (NodeId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;  // adjacency is sorted, so this is lexicographic
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d;
  d.reserve(adj_.size());
  for (const auto& nbrs : adj_) d.push_back(nbrs.size());
  std::sort(d.begin(), d.end());
  return d;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adj_ == b.adj_ && a.meta_ == b.meta_;
}

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack;
  std::size_t components = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

RankNullity rank_nullity(const Graph& g) {
  std::size_t rank = g.node_count() - component_count(g);
  return {rank, g.edge_count() - rank};
}

std::size_t triangle_count(const Graph& g) {
  // For each edge (u,v) with u < v, count common neighbors w > v.
  std::size_t total = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      auto iv = std::upper_bound(nv.begin(), nv.end(), v);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          ++total;
          ++iu;
          ++iv;
        }
      }
    }
  }
  return total;
}

Graph with_edge_removed(const Graph& g, NodeId u, NodeId v) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("with_edge_removed: (" + std::to_string(u) +
                                "," + std::to_string(v) + ") is not an edge");
  }
  if (u > v) std::swap(u, v);
  GraphBuilder b(g.node_count());
  for (NodeId w = 0; w < g.node_count(); ++w) b.set_meta(w, g.meta(w));
  for (auto [a, c] : g.edges()) {
    if (a == u && c == v) continue;
    b.add_edge(a, c);
  }
  return std::move(b).freeze();
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.node_count()) {
      throw std::out_of_range("induced_subgraph: node out of range");
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw std::invalid_argument(
          "induced_subgraph: keep list must be sorted and distinct");
    }
  }
  std::vector<NodeId> remap(g.node_count(), static_cast<NodeId>(-1));
  GraphBuilder b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<NodeId>(i);
    b.set_meta(static_cast<NodeId>(i), g.meta(keep[i]));
  }
  for (NodeId u : keep) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && remap[v] != static_cast<NodeId>(-1)) {
        b.add_edge(remap[u], remap[v]);
      }
    }
  }
  return std::move(b).freeze();
}

}  // namespace simplex
