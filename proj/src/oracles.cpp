#include "simplex/oracles.hpp"

#include <algorithm>
#include <bit>
#include <boost/dynamic_bitset.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace simplex {

namespace {

using Bits = boost::dynamic_bitset<>;
constexpr std::size_t npos = Bits::npos;

// Counts search steps and aborts the whole oracle call once the ceiling is
// reached; a partial count must never escape.
struct BudgetMeter {
  std::size_t left;
  const char* op;

  void tick() {
    if (left == 0) {
      throw BudgetError(std::string(op) + ": step budget exhausted");
    }
    --left;
  }
};

void check_node_budget(const Graph& g, const OracleBudget& b,
                       const char* op) {
  if (g.node_count() > b.max_nodes) {
    throw BudgetError(std::string(op) + ": " +
                      std::to_string(g.node_count()) +
                      " nodes above budget of " +
                      std::to_string(b.max_nodes));
  }
}

void check_edge_budget(const Graph& g, const OracleBudget& b,
                       const char* op) {
  if (g.edge_count() > b.max_edges) {
    throw BudgetError(std::string(op) + ": " +
                      std::to_string(g.edge_count()) +
                      " edges above budget of " +
                      std::to_string(b.max_edges));
  }
}

std::vector<Bits> bit_adjacency(const Graph& g) {
  std::vector<Bits> adj(g.node_count(), Bits(g.node_count()));
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) adj[u].set(v);
  }
  return adj;
}

// ---- independence ----------------------------------------------------

struct MisSearch {
  const std::vector<Bits>& adj;
  BudgetMeter meter;
  std::size_t best = 0;

  // Partition the candidates into greedily grown cliques; an independent
  // set takes at most one node per clique, so the count bounds what the
  // candidates can still contribute.
  std::size_t clique_cover_bound(const Bits& cand) const {
    std::size_t cliques = 0;
    Bits rem = cand;
    for (std::size_t v = rem.find_first(); v != npos; v = rem.find_first()) {
      ++cliques;
      rem.reset(v);
      Bits common = rem & adj[v];
      for (std::size_t u = common.find_first(); u != npos;
           u = common.find_first()) {
        rem.reset(u);
        common &= adj[u];
      }
    }
    return cliques;
  }

  void expand(const Bits& cand, std::size_t size) {
    meter.tick();
    if (cand.none()) {
      best = std::max(best, size);
      return;
    }
    if (size + clique_cover_bound(cand) <= best) return;

    std::size_t pick = npos;
    std::size_t pick_deg = 0;
    for (std::size_t u = cand.find_first(); u != npos;
         u = cand.find_next(u)) {
      std::size_t d = (adj[u] & cand).count();
      if (pick == npos || d > pick_deg) {
        pick = u;
        pick_deg = d;
      }
    }

    Bits incl = cand;
    incl.reset(pick);
    incl -= adj[pick];
    expand(incl, size + 1);

    Bits excl = cand;
    excl.reset(pick);
    expand(excl, size);
  }
};

std::size_t greedy_independent(const std::vector<Bits>& adj) {
  const std::size_t n = adj.size();
  Bits blocked(n);
  std::size_t size = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!blocked.test(v)) {
      ++size;
      blocked |= adj[v];
      blocked.set(v);
    }
  }
  return size;
}

// ---- domination ------------------------------------------------------

struct DomSearch {
  const std::vector<Bits>& closed;  // closed neighborhoods N[v]
  std::size_t n;
  BudgetMeter meter;
  std::size_t best;

  // Nodes with pairwise disjoint closed neighborhoods need pairwise
  // distinct dominators.
  std::size_t packing_bound(const Bits& undominated) const {
    Bits blocked(n);
    std::size_t lb = 0;
    for (std::size_t v = undominated.find_first(); v != npos;
         v = undominated.find_next(v)) {
      if ((closed[v] & blocked).none()) {
        ++lb;
        blocked |= closed[v];
      }
    }
    return lb;
  }

  void branch(const Bits& dominated, std::size_t chosen,
              const Bits& excluded) {
    meter.tick();
    if (dominated.all()) {
      best = std::min(best, chosen);
      return;
    }
    Bits undominated = ~dominated;
    if (chosen + packing_bound(undominated) >= best) return;

    // Most constrained undominated node: fewest allowed dominators.
    std::size_t u = npos;
    std::size_t u_options = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = undominated.find_first(); v != npos;
         v = undominated.find_next(v)) {
      std::size_t options = (closed[v] - excluded).count();
      if (options < u_options) {
        u = v;
        u_options = options;
      }
    }
    if (u_options == 0) return;  // every potential dominator ruled out

    Bits cands = closed[u] - excluded;
    Bits ruled_out = excluded;
    for (std::size_t w = cands.find_first(); w != npos;
         w = cands.find_next(w)) {
      branch(dominated | closed[w], chosen + 1, ruled_out);
      ruled_out.set(w);
    }
  }
};

std::vector<Bits> closed_neighborhoods(const std::vector<Bits>& adj) {
  std::vector<Bits> closed = adj;
  for (std::size_t v = 0; v < closed.size(); ++v) closed[v].set(v);
  return closed;
}

std::size_t greedy_dominating(const std::vector<Bits>& closed) {
  const std::size_t n = closed.size();
  Bits dominated(n);
  std::size_t size = 0;
  while (!dominated.all()) {
    std::size_t pick = 0;
    std::size_t gain = 0;
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t covers = (closed[v] - dominated).count();
      if (covers > gain) {
        gain = covers;
        pick = v;
      }
    }
    dominated |= closed[pick];
    ++size;
  }
  return size;
}

// ---- colorings -------------------------------------------------------

// Reverse min-degree removal; coloring in this order reaches the dense core
// first, which keeps the search tree shallow where it matters.
std::vector<NodeId> degeneracy_order(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<NodeId> removal;
  removal.reserve(n);
  for (std::size_t round = 0; round < n; ++round) {
    NodeId pick = 0;
    std::size_t pick_deg = std::numeric_limits<std::size_t>::max();
    for (NodeId v = 0; v < n; ++v) {
      if (!removed[v] && deg[v] < pick_deg) {
        pick = v;
        pick_deg = deg[v];
      }
    }
    removed[pick] = 1;
    removal.push_back(pick);
    for (NodeId w : g.neighbors(pick)) {
      if (!removed[w]) --deg[w];
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

struct ColoringSearch {
  // earlier[p] = positions before p holding a neighbor of position p's node
  std::vector<std::vector<std::uint32_t>> earlier;
  std::uint64_t palette_mask;
  BudgetMeter meter;
  bool stop_at_first;

  std::vector<std::uint32_t> color;  // by position
  std::uint64_t completions = 0;

  void run(std::size_t p) {
    if (p == earlier.size()) {
      ++completions;
      return;
    }
    std::uint64_t used = 0;
    for (std::uint32_t ep : earlier[p]) used |= std::uint64_t{1} << color[ep];
    std::uint64_t avail = palette_mask & ~used;
    while (avail != 0) {
      meter.tick();
      std::uint32_t c =
          static_cast<std::uint32_t>(std::countr_zero(avail));
      avail &= avail - 1;
      color[p] = c;
      run(p + 1);
      if (stop_at_first && completions > 0) return;
    }
  }
};

std::uint64_t run_coloring_search(const Graph& g, unsigned colors,
                                  const OracleBudget& budget,
                                  bool stop_at_first, const char* op) {
  check_node_budget(g, budget, op);
  if (colors > 64) {
    throw std::invalid_argument(std::string(op) +
                                ": palettes above 64 colors unsupported");
  }
  const std::size_t n = g.node_count();
  if (colors == 0) return n == 0 ? 1 : 0;

  auto order = degeneracy_order(g);
  std::vector<std::uint32_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;

  ColoringSearch search;
  search.earlier.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (NodeId w : g.neighbors(order[p])) {
      if (position[w] < p) search.earlier[p].push_back(position[w]);
    }
  }
  search.palette_mask =
      colors == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << colors) - 1;
  search.meter = {budget.max_steps, op};
  search.stop_at_first = stop_at_first;
  search.color.assign(n, 0);
  search.run(0);
  return search.completions;
}

// ---- orientations ----------------------------------------------------

struct OrientationSweep {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::size_t n;

  std::vector<std::vector<NodeId>> out;
  std::vector<std::uint32_t> indegree;
  std::vector<NodeId> queue;
  std::vector<NodeId> topo;

  explicit OrientationSweep(const Graph& g)
      : edges(g.edges()),
        n(g.node_count()),
        out(n),
        indegree(n),
        queue(n),
        topo(n) {}

  // Applies the mask, runs Kahn's algorithm, and reports whether the
  // orientation is acyclic. `out` holds the directed adjacency afterwards.
  bool orient_and_check(std::uint64_t mask) {
    for (auto& lst : out) lst.clear();
    std::fill(indegree.begin(), indegree.end(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      NodeId from = (mask >> i) & 1 ? u : v;
      NodeId to = (mask >> i) & 1 ? v : u;
      out[from].push_back(to);
      ++indegree[to];
    }
    std::size_t head = 0, tail = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (indegree[v] == 0) queue[tail++] = v;
    }
    std::size_t seen = 0;
    while (head < tail) {
      NodeId v = queue[head++];
      ++seen;
      for (NodeId w : out[v]) {
        if (--indegree[w] == 0) queue[tail++] = w;
      }
    }
    return seen == n;
  }
};

void check_orientation_budget(const Graph& g, const OracleBudget& budget,
                              const char* op) {
  check_edge_budget(g, budget, op);
  const std::size_t m = g.edge_count();
  if (m >= 63 || (std::uint64_t{1} << m) > budget.max_steps) {
    throw BudgetError(std::string(op) + ": 2^" + std::to_string(m) +
                      " orientations above step budget");
  }
}

// ---- matchings -------------------------------------------------------

struct MatchingSearch {
  const std::vector<Bits>& adj;
  BudgetMeter meter;

  std::uint64_t count(Bits& covered) {
    meter.tick();
    std::size_t v = (~covered).find_first();
    if (v == npos) return 1;
    Bits cands = adj[v] - covered;
    std::uint64_t total = 0;
    for (std::size_t u = cands.find_first(); u != npos;
         u = cands.find_next(u)) {
      covered.set(v);
      covered.set(u);
      total += count(covered);
      covered.reset(v);
      covered.reset(u);
    }
    return total;
  }
};

}  // namespace

BigInt max_independent_set(const Graph& g, const OracleBudget& budget) {
  check_node_budget(g, budget, "max_independent_set");
  if (g.node_count() == 0) return 0;
  auto adj = bit_adjacency(g);
  MisSearch search{adj, {budget.max_steps, "max_independent_set"}};
  search.best = greedy_independent(adj);
  Bits all(g.node_count());
  all.set();
  search.expand(all, 0);
  return search.best;
}

BigInt min_dominating_set(const Graph& g, const OracleBudget& budget) {
  check_node_budget(g, budget, "min_dominating_set");
  const std::size_t n = g.node_count();
  if (n == 0) return 0;
  auto adj = bit_adjacency(g);
  auto closed = closed_neighborhoods(adj);
  DomSearch search{closed, n, {budget.max_steps, "min_dominating_set"},
                   greedy_dominating(closed)};
  search.branch(Bits(n), 0, Bits(n));
  return search.best;
}

BigInt count_proper_colorings(const Graph& g, unsigned colors,
                              const OracleBudget& budget) {
  return run_coloring_search(g, colors, budget, false,
                             "count_proper_colorings");
}

bool has_proper_coloring(const Graph& g, unsigned colors,
                         const OracleBudget& budget) {
  return run_coloring_search(g, colors, budget, true,
                             "has_proper_coloring") > 0;
}

BigInt count_acyclic_orientations(const Graph& g,
                                  const OracleBudget& budget) {
  check_node_budget(g, budget, "count_acyclic_orientations");
  check_orientation_budget(g, budget, "count_acyclic_orientations");
  OrientationSweep sweep(g);
  const std::uint64_t masks = std::uint64_t{1} << g.edge_count();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (sweep.orient_and_check(mask)) ++count;
  }
  return count;
}

BigInt count_root_connected_acyclic(const Graph& g, NodeId root,
                                    const OracleBudget& budget) {
  if (root >= g.node_count()) {
    throw std::out_of_range("count_root_connected_acyclic: root out of range");
  }
  check_node_budget(g, budget, "count_root_connected_acyclic");
  check_orientation_budget(g, budget, "count_root_connected_acyclic");

  OrientationSweep sweep(g);
  const std::size_t n = g.node_count();
  const std::uint64_t masks = std::uint64_t{1} << g.edge_count();
  std::vector<std::vector<NodeId>> in(n);
  std::vector<char> reached(n);
  std::vector<NodeId> stack;
  std::uint64_t count = 0;

  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (!sweep.orient_and_check(mask)) continue;
    // Walk edges backwards from the root; every node must reach it.
    for (auto& lst : in) lst.clear();
    for (std::size_t v = 0; v < n; ++v) {
      for (NodeId w : sweep.out[v]) in[w].push_back(static_cast<NodeId>(v));
    }
    std::fill(reached.begin(), reached.end(), 0);
    reached[root] = 1;
    stack.assign(1, root);
    std::size_t seen = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : in[v]) {
        if (!reached[w]) {
          reached[w] = 1;
          ++seen;
          stack.push_back(w);
        }
      }
    }
    if (seen == n) ++count;
  }
  return count;
}

BigInt count_perfect_matchings(const Graph& g, const OracleBudget& budget) {
  check_node_budget(g, budget, "count_perfect_matchings");
  const std::size_t n = g.node_count();
  if (n % 2 != 0) return 0;  // parity: truthful count, not an error
  if (n == 0) return 1;
  auto adj = bit_adjacency(g);
  MatchingSearch search{adj, {budget.max_steps, "count_perfect_matchings"}};
  Bits covered(n);
  return search.count(covered);
}

MatchingProfile matching_profile_oracle(const Graph& g, NodeId h1, NodeId h2,
                                        const OracleBudget& budget) {
  if (h1 == h2) {
    throw std::invalid_argument("matching_profile_oracle: h1 = h2");
  }
  if (h1 >= g.node_count() || h2 >= g.node_count()) {
    throw std::out_of_range("matching_profile_oracle: hub out of range");
  }
  std::vector<NodeId> keep;
  keep.reserve(g.node_count() - 2);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (v != h1 && v != h2) keep.push_back(v);
  }
  Graph without = induced_subgraph(g, keep);
  return {count_perfect_matchings(without, budget),
          count_perfect_matchings(g, budget)};
}

}  // namespace simplex
