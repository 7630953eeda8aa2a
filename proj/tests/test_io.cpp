#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "simplex/io.hpp"

namespace {
using namespace simplex;

std::string edgelist_bytes(FamilyParams p) {
  std::ostringstream out;
  write_edgelist(out, build_corona(p), p);
  return out.str();
}

}  // namespace

TEST_CASE("edge list bytes are fixed by the parameters") {
  CHECK(edgelist_bytes({1, 0}) ==
        "# simplex family graph\n"
        "# q=1 g=0\n"
        "# N=3 M=3\n"
        "0 1\n"
        "0 2\n"
        "1 2\n");
  CHECK(edgelist_bytes({2, 1}) == edgelist_bytes({2, 1}));
}

TEST_CASE("edge list round-trip restores graph and metadata") {
  FamilyParams p{2, 1};
  Graph original = build_corona(p);
  std::istringstream in(edgelist_bytes(p));
  EdgeListData data = read_edgelist(in);
  CHECK(data.params.q == 2);
  CHECK(data.params.g == 1);
  CHECK(data.graph == original);
}

TEST_CASE("edge list reader rejects inconsistent input") {
  std::istringstream no_header("0 1\n1 2\n");
  CHECK_THROWS_AS(read_edgelist(no_header), std::invalid_argument);

  std::istringstream short_body(
      "# q=1 g=0\n# N=3 M=3\n0 1\n0 2\n");
  CHECK_THROWS_AS(read_edgelist(short_body), std::invalid_argument);

  std::istringstream wrong_n("# q=1 g=0\n# N=4 M=3\n0 1\n0 2\n1 2\n");
  CHECK_THROWS_AS(read_edgelist(wrong_n), std::invalid_argument);

  std::istringstream bad_line("# q=1 g=0\n# N=3 M=1\nnot an edge\n");
  CHECK_THROWS_AS(read_edgelist(bad_line), std::invalid_argument);

  std::istringstream out_of_range_edge(
      "# q=1 g=0\n# N=3 M=3\n0 1\n0 2\n1 7\n");
  CHECK_THROWS_AS(read_edgelist(out_of_range_edge), std::out_of_range);
}

TEST_CASE("dot output") {
  std::ostringstream out;
  FamilyParams p{1, 0};
  write_dot(out, build_corona(p), p);
  CHECK(out.str() ==
        "graph simplex_q1_g0 {\n"
        "  v0;\n"
        "  v1;\n"
        "  v2;\n"
        "  v0 -- v1;\n"
        "  v0 -- v2;\n"
        "  v1 -- v2;\n"
        "}\n");
}

TEST_CASE("json output carries structure and cohorts") {
  FamilyParams p{2, 1};
  std::ostringstream out;
  write_graph_json(out, build_corona(p), p);
  auto doc = nlohmann::json::parse(out.str());
  CHECK(doc.at("q") == 2);
  CHECK(doc.at("g") == 1);
  CHECK(doc.at("n") == 16);
  CHECK(doc.at("m") == 36);
  CHECK(doc.at("hubs") == nlohmann::json::array({0, 1, 2, 3}));
  REQUIRE(doc.at("generation").size() == 16);
  for (std::size_t v = 0; v < 16; ++v) {
    CHECK(doc.at("generation")[v] == (v < 4 ? 0 : 1));
  }
  REQUIRE(doc.at("edges").size() == 36);
  CHECK(doc.at("edges")[0] == nlohmann::json::array({0, 1}));
}
