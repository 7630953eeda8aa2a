#include "simplex/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace simplex {

namespace {

BigInt pair_count(unsigned q) {
  return BigInt(q + 1) * (q + 2) / 2;
}

void check_guard(FamilyParams p, SizeGuard guard) {
  BigInt n = node_count(p);
  if (n > guard.max_nodes) {
    throw SizeGuardError("graph for q=" + std::to_string(p.q) +
                         " g=" + std::to_string(p.g) + " needs " + n.str() +
                         " nodes, above the limit of " +
                         std::to_string(guard.max_nodes));
  }
}

Graph complete_graph(unsigned q) {
  GraphBuilder b(q + 2, NodeMeta{0, true});
  for (NodeId u = 0; u + 1 < q + 2; ++u) {
    for (NodeId v = u + 1; v < q + 2; ++v) b.add_edge(u, v);
  }
  return std::move(b).freeze();
}

Graph join_step(const Graph& sub, unsigned q) {
  const unsigned hubs = q + 2;
  const std::size_t n_sub = sub.node_count();
  const std::size_t copies = static_cast<std::size_t>(hubs) * (hubs - 1) / 2;
  // Each copy keeps only two of its nodes on the final hubs.
  const std::size_t n_new = hubs + copies * (n_sub - 2);

  GraphBuilder b(n_new);
  for (NodeId h = 0; h < hubs; ++h) b.set_meta(h, NodeMeta{0, true});

  const auto sub_edges = sub.edges();
  std::vector<NodeId> remap(n_sub);
  NodeId next = hubs;
  for (NodeId i = 0; i + 1 < hubs; ++i) {
    for (NodeId j = i + 1; j < hubs; ++j) {
      // Copy (i,j): copy-hubs i and j collapse onto final hubs i and j;
      // every other copy node, the remaining q copy-hubs included, lands
      // one generation later than it sat in the sub-graph.
      for (NodeId v = 0; v < n_sub; ++v) {
        if (v == i || v == j) {
          remap[v] = v;
        } else {
          remap[v] = next++;
          b.set_meta(remap[v],
                     NodeMeta{sub.meta(v).generation + 1, false});
        }
      }
      for (auto [a, c] : sub_edges) b.add_edge(remap[a], remap[c]);
    }
  }
  return std::move(b).freeze();
}

}  // namespace

void validate(FamilyParams p) {
  if (p.q < 1) {
    throw std::invalid_argument("family parameter q must be at least 1");
  }
}

Graph build_corona(FamilyParams p, SizeGuard guard) {
  validate(p);
  check_guard(p, guard);

  GraphBuilder builder(p.q + 2, NodeMeta{0, true});
  std::vector<std::pair<NodeId, NodeId>> current;  // every edge so far
  for (NodeId u = 0; u + 1 < p.q + 2; ++u) {
    for (NodeId v = u + 1; v < p.q + 2; ++v) {
      builder.add_edge(u, v);
      current.emplace_back(u, v);
    }
  }

  for (unsigned round = 1; round <= p.g; ++round) {
    // Each round walks the pre-round edge set in lexicographic order; edges
    // appended during the round only take part in the next one.
    std::sort(current.begin(), current.end());
    std::vector<std::pair<NodeId, NodeId>> added;
    added.reserve(current.size() * (p.q * (p.q + 3) / 2));
    for (auto [u, v] : current) {
      NodeId base = static_cast<NodeId>(builder.node_count());
      for (unsigned k = 0; k < p.q; ++k) {
        builder.add_node(NodeMeta{round, false});
      }
      for (unsigned k = 0; k < p.q; ++k) {
        NodeId w = base + k;
        builder.add_edge(u, w);
        added.emplace_back(u, w);
        builder.add_edge(v, w);
        added.emplace_back(v, w);
        for (unsigned l = k + 1; l < p.q; ++l) {
          builder.add_edge(w, base + l);
          added.emplace_back(w, base + l);
        }
      }
    }
    current.insert(current.end(), added.begin(), added.end());
  }
  return std::move(builder).freeze();
}

Graph build_join(FamilyParams p, SizeGuard guard) {
  validate(p);
  check_guard(p, guard);
  Graph g = complete_graph(p.q);
  for (unsigned round = 1; round <= p.g; ++round) {
    g = join_step(g, p.q);
  }
  return g;
}

BigInt edge_count(FamilyParams p) {
  validate(p);
  return int_pow(pair_count(p.q), p.g + 1);
}

BigInt node_count(FamilyParams p) {
  validate(p);
  BigRat n(2 * edge_count(p) + 2 * (p.q + 2), p.q + 3);
  return require_integer(n, "node count");
}

BigInt new_node_count(FamilyParams p) {
  validate(p);
  if (p.g == 0) return p.q + 2;
  return BigInt(p.q) * int_pow(pair_count(p.q), p.g);
}

BigInt DegreeCensus::total_nodes() const {
  BigInt t = 0;
  for (const auto& row : rows) t += row.count;
  return t;
}

BigInt DegreeCensus::total_degree() const {
  BigInt t = 0;
  for (const auto& row : rows) t += row.degree * row.count;
  return t;
}

DegreeCensus degree_census(FamilyParams p) {
  validate(p);
  DegreeCensus census;
  for (unsigned gen = 0; gen <= p.g; ++gen) {
    DegreeCensusRow row;
    row.generation = gen;
    row.degree = int_pow(p.q + 1, p.g - gen + 1);
    row.count = new_node_count({p.q, gen});
    census.rows.push_back(std::move(row));
  }
  return census;
}

std::vector<NodeId> hub_nodes(const Graph& g) {
  std::vector<NodeId> hubs;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.meta(v).is_hub) hubs.push_back(v);
  }
  return hubs;
}

}  // namespace simplex
