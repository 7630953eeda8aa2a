#include "simplex/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace simplex {

namespace {

// Node ids are assigned per generation in one contiguous block, so the
// cohort boundaries recover every node's generation from (q, g) alone.
std::vector<std::size_t> cohort_boundaries(FamilyParams p) {
  std::vector<std::size_t> ends;
  std::size_t total = 0;
  for (unsigned gen = 0; gen <= p.g; ++gen) {
    total += new_node_count({p.q, gen}).convert_to<std::size_t>();
    ends.push_back(total);
  }
  return ends;
}

}  // namespace

void write_edgelist(std::ostream& out, const Graph& g, FamilyParams p) {
  out << "# simplex family graph\n";
  out << "# q=" << p.q << " g=" << p.g << "\n";
  out << "# N=" << g.node_count() << " M=" << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

EdgeListData read_edgelist(std::istream& in) {
  unsigned q = 0, g = 0;
  std::size_t n = 0, m = 0;
  bool have_params = false, have_sizes = false;

  std::string line;
  std::vector<std::pair<NodeId, NodeId>> edges;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream header(line.substr(1));
      std::string token;
      while (header >> token) {
        if (token.rfind("q=", 0) == 0) {
          q = static_cast<unsigned>(std::stoul(token.substr(2)));
          have_params = true;
        } else if (token.rfind("g=", 0) == 0) {
          g = static_cast<unsigned>(std::stoul(token.substr(2)));
        } else if (token.rfind("N=", 0) == 0) {
          n = std::stoul(token.substr(2));
          have_sizes = true;
        } else if (token.rfind("M=", 0) == 0) {
          m = std::stoul(token.substr(2));
        }
      }
      continue;
    }
    std::istringstream body(line);
    NodeId u, v;
    if (!(body >> u >> v)) {
      throw std::invalid_argument("read_edgelist: malformed edge line: " +
                                  line);
    }
    edges.emplace_back(u, v);
  }
  if (!have_params || !have_sizes) {
    throw std::invalid_argument("read_edgelist: missing q/g or N/M header");
  }
  if (edges.size() != m) {
    throw std::invalid_argument("read_edgelist: header M=" +
                                std::to_string(m) + " but body has " +
                                std::to_string(edges.size()) + " edges");
  }

  FamilyParams params{q, g};
  auto ends = cohort_boundaries(params);
  if (ends.back() != n) {
    throw std::invalid_argument(
        "read_edgelist: header N inconsistent with q,g");
  }
  GraphBuilder b(n);
  unsigned gen = 0;
  for (NodeId v = 0; v < n; ++v) {
    while (v >= ends[gen]) ++gen;
    b.set_meta(v, NodeMeta{gen, gen == 0});
  }
  for (auto [u, v] : edges) b.add_edge(u, v);
  return {params, std::move(b).freeze()};
}

void write_dot(std::ostream& out, const Graph& g, FamilyParams p) {
  out << "graph simplex_q" << p.q << "_g" << p.g << " {\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "  v" << v << ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  v" << u << " -- v" << v << ";\n";
  }
  out << "}\n";
}

void write_graph_json(std::ostream& out, const Graph& g, FamilyParams p) {
  nlohmann::ordered_json doc;
  doc["q"] = p.q;
  doc["g"] = p.g;
  doc["n"] = g.node_count();
  doc["m"] = g.edge_count();
  doc["hubs"] = nlohmann::ordered_json::array();
  for (NodeId v : hub_nodes(g)) doc["hubs"].push_back(v);
  doc["generation"] = nlohmann::ordered_json::array();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    doc["generation"].push_back(g.meta(v).generation);
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) {
    doc["edges"].push_back(nlohmann::ordered_json::array({u, v}));
  }
  out << doc.dump(2) << "\n";
}

}  // namespace simplex
