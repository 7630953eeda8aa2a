#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplex/oracles.hpp"

namespace simplex {

namespace {

constexpr std::size_t kDeterminantNodeLimit = 3000;

// Fraction-free elimination; all divisions are exact by Sylvester's
// identity, so nothing ever leaves the integers. Destroys the input.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>>& m) {
  const std::size_t d = m.size();
  if (d == 0) return 1;
  BigInt prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < d && m[pivot][k] == 0) ++pivot;
      if (pivot == d) return 0;
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return negate ? -m[d - 1][d - 1] : m[d - 1][d - 1];
}

void check_determinant_limit(std::size_t n, const char* op) {
  if (n > kDeterminantNodeLimit) {
    throw BudgetError(std::string(op) + ": " + std::to_string(n) +
                      " nodes above the determinant limit of " +
                      std::to_string(kDeterminantNodeLimit));
  }
}

// Spanning trees of g with cv merged into cu: weighted Laplacian over the
// contraction multigraph, parallel edges summed as weights.
BigInt spanning_trees_of_contraction(const Graph& g, NodeId cu, NodeId cv) {
  const std::size_t n = g.node_count() - 1;
  if (n == 1) return 1;
  auto map = [cu, cv](NodeId w) -> NodeId {
    if (w == cv) return cu;
    return w > cv ? w - 1 : w;
  };
  std::vector<std::vector<std::int64_t>> weight(
      n, std::vector<std::int64_t>(n, 0));
  for (auto [x, y] : g.edges()) {
    NodeId a = map(x);
    NodeId b = map(y);
    if (a == b) continue;
    ++weight[a][b];
    ++weight[b][a];
  }
  std::vector<std::vector<BigInt>> minor(n - 1,
                                         std::vector<BigInt>(n - 1, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::int64_t row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) row_sum += weight[i][j];
    minor[i][i] = row_sum;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (i != j) minor[i][j] = -weight[i][j];
    }
  }
  return bareiss_determinant(minor);
}

}  // namespace

BigInt count_spanning_trees_mt(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  check_determinant_limit(n, "count_spanning_trees_mt");
  if (component_count(g) != 1) return 0;

  std::vector<std::vector<BigInt>> minor(n - 1,
                                         std::vector<BigInt>(n - 1, 0));
  for (NodeId v = 0; v + 1 < n; ++v) {
    minor[v][v] = g.degree(v);
  }
  for (auto [u, v] : g.edges()) {
    if (u + 1 < n && v + 1 < n) {
      minor[u][v] = -1;
      minor[v][u] = -1;
    }
  }
  return bareiss_determinant(minor);
}

BigInt count_spanning_trees_containing_edge(const Graph& g, NodeId u,
                                            NodeId v) {
  if (u >= g.node_count() || v >= g.node_count()) {
    throw std::out_of_range(
        "count_spanning_trees_containing_edge: node out of range");
  }
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument(
        "count_spanning_trees_containing_edge: (" + std::to_string(u) + "," +
        std::to_string(v) + ") is not an edge");
  }
  check_determinant_limit(g.node_count(),
                          "count_spanning_trees_containing_edge");
  Graph without = with_edge_removed(g, u, v);
  if (component_count(without) == 1) {
    return count_spanning_trees_mt(g) - count_spanning_trees_mt(without);
  }
  // Bridge: every spanning tree needs the edge; count via contraction.
  return spanning_trees_of_contraction(g, std::min(u, v), std::max(u, v));
}

}  // namespace simplex
