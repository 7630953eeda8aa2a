#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <string>
#include <vector>

#include "simplex/oracles.hpp"

namespace simplex {

namespace {

using Bits = boost::dynamic_bitset<>;
using Partition = std::vector<std::vector<std::uint32_t>>;

struct CanonSearch {
  const std::vector<Bits>& adj;
  std::size_t n;
  std::size_t leaves_left;

  std::vector<std::uint8_t> best_code;
  std::vector<std::uint32_t> best_perm;  // position -> original node
  bool have_best = false;

  // Splits cells by neighbor counts into other cells until stable. Cell
  // member lists stay ascending, group order is by count ascending, so the
  // refinement is label-independent up to isomorphism.
  void refine(Partition& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        Bits splitter(n);
        for (std::uint32_t v : cells[s]) splitter.set(v);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() <= 1) continue;
          std::map<std::size_t, std::vector<std::uint32_t>> groups;
          for (std::uint32_t v : cells[c]) {
            groups[(adj[v] & splitter).count()].push_back(v);
          }
          if (groups.size() <= 1) continue;
          Partition replacement;
          replacement.reserve(groups.size());
          for (auto& [cnt, members] : groups) {
            replacement.push_back(std::move(members));
          }
          cells.erase(cells.begin() + c);
          cells.insert(cells.begin() + c,
                       std::make_move_iterator(replacement.begin()),
                       std::make_move_iterator(replacement.end()));
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<std::uint8_t> leaf_code(
      const std::vector<std::uint32_t>& perm) const {
    std::vector<std::uint8_t> code((n * (n - 1) / 2 + 7) / 8, 0);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++bit) {
        if (adj[perm[i]].test(perm[j])) {
          code[bit / 8] |= static_cast<std::uint8_t>(1u << (bit % 8));
        }
      }
    }
    return code;
  }

  void search(Partition cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      if (leaves_left == 0) {
        throw BudgetError("canonical_form: refinement leaf budget exhausted");
      }
      --leaves_left;
      std::vector<std::uint32_t> perm(n);
      for (std::size_t p = 0; p < n; ++p) perm[p] = cells[p][0];
      auto code = leaf_code(perm);
      if (!have_best || code < best_code) {
        best_code = std::move(code);
        best_perm = std::move(perm);
        have_best = true;
      }
      return;
    }
    // Individualize each member of the first non-singleton cell in turn.
    for (std::size_t k = 0; k < cells[target].size(); ++k) {
      Partition child = cells;
      std::uint32_t v = child[target][k];
      std::vector<std::uint32_t> rest;
      rest.reserve(child[target].size() - 1);
      for (std::uint32_t w : child[target]) {
        if (w != v) rest.push_back(w);
      }
      child[target] = {v};
      child.insert(child.begin() + target + 1, std::move(rest));
      search(std::move(child));
    }
  }
};

}  // namespace

std::vector<std::pair<NodeId, NodeId>> canonical_form(
    const Graph& g, const OracleBudget& budget) {
  if (g.node_count() > budget.max_nodes) {
    throw BudgetError("canonical_form: " + std::to_string(g.node_count()) +
                      " nodes above budget of " +
                      std::to_string(budget.max_nodes));
  }
  const std::size_t n = g.node_count();
  if (n == 0) return {};

  std::vector<Bits> adj(n, Bits(n));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) adj[u].set(v);
  }

  CanonSearch search{adj, n, budget.max_steps, {}, {}, false};
  Partition initial(1);
  initial[0].resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    initial[0][v] = static_cast<std::uint32_t>(v);
  }
  search.search(std::move(initial));

  std::vector<std::uint32_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[search.best_perm[p]] = p;
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    NodeId a = position[u];
    NodeId b = position[v];
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool isomorphic(const Graph& a, const Graph& b, const OracleBudget& budget) {
  if (a.node_count() != b.node_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a, budget) == canonical_form(b, budget);
}

}  // namespace simplex
