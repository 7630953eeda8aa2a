#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simplex/oracles.hpp"

namespace simplex {

namespace {

// Edge contraction with parallel-edge collapse; chromatic polynomials are
// blind to multiplicities, so the simple graph is enough.
Graph contract_edge(const Graph& g, NodeId cu, NodeId cv) {
  if (cu > cv) std::swap(cu, cv);
  GraphBuilder b(g.node_count() - 1);
  auto map = [cu, cv](NodeId w) -> NodeId {
    if (w == cv) return cu;
    return w > cv ? w - 1 : w;
  };
  for (auto [x, y] : g.edges()) {
    NodeId a = map(x);
    NodeId c = map(y);
    if (a == c) continue;  // the contracted edge itself
    if (a > c) std::swap(a, c);
    if (!b.has_edge(a, c)) b.add_edge(a, c);
  }
  return std::move(b).freeze();
}

struct DcSolver {
  std::size_t steps_left;
  OracleBudget budget;
  std::unordered_map<std::string, std::vector<BigInt>> memo;

  std::string make_key(const Graph& g) {
    std::string key = std::to_string(g.node_count());
    for (auto [u, v] : canonical_form(g, budget)) {
      key += ' ';
      key += std::to_string(u);
      key += ',';
      key += std::to_string(v);
    }
    return key;
  }

  std::vector<BigInt> solve(const Graph& g) {
    if (steps_left == 0) {
      throw BudgetError("chromatic_polynomial_dc: step budget exhausted");
    }
    --steps_left;
    if (g.edge_count() == 0) {
      std::vector<BigInt> coeffs(g.node_count() + 1, 0);
      coeffs[g.node_count()] = 1;
      return coeffs;
    }
    std::string key = make_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    auto [u, v] = g.edges().front();
    std::vector<BigInt> result = solve(with_edge_removed(g, u, v));
    std::vector<BigInt> contracted = solve(contract_edge(g, u, v));
    for (std::size_t i = 0; i < contracted.size(); ++i) {
      result[i] -= contracted[i];
    }
    memo.emplace(std::move(key), result);
    return result;
  }
};

}  // namespace

std::vector<BigInt> chromatic_polynomial_dc(const Graph& g,
                                            const OracleBudget& budget) {
  if (g.node_count() > budget.max_nodes) {
    throw BudgetError("chromatic_polynomial_dc: " +
                      std::to_string(g.node_count()) +
                      " nodes above budget of " +
                      std::to_string(budget.max_nodes));
  }
  if (g.edge_count() > budget.max_edges) {
    throw BudgetError("chromatic_polynomial_dc: " +
                      std::to_string(g.edge_count()) +
                      " edges above budget of " +
                      std::to_string(budget.max_edges));
  }
  DcSolver solver{budget.max_steps, budget, {}};
  return solver.solve(g);
}

}  // namespace simplex
