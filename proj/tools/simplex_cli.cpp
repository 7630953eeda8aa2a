#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "simplex/closed_form.hpp"
#include "simplex/family.hpp"
#include "simplex/io.hpp"
#include "simplex/verify.hpp"

namespace {

using namespace simplex;

std::vector<unsigned> parse_range(const std::string& text) {
  auto parse_one = [](const std::string& s) {
    std::size_t used = 0;
    unsigned long value = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return static_cast<unsigned>(value);
  };
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {parse_one(text)};
    unsigned lo = parse_one(text.substr(0, dots));
    unsigned hi = parse_one(text.substr(dots + 2));
    if (lo > hi) {
      throw CLI::ValidationError("range", "descending range: " + text);
    }
    std::vector<unsigned> values;
    for (unsigned v = lo; v <= hi; ++v) values.push_back(v);
    return values;
  } catch (const CLI::ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected a number or \"a..b\": " +
                                            text);
  }
}

std::size_t size_guard_from_env() {
  if (const char* env = std::getenv("SIMPLEX_MAX_NODES")) {
    try {
      std::size_t used = 0;
      std::string text(env);
      std::size_t value = std::stoull(text, &used);
      if (used != text.size() || value == 0) throw std::invalid_argument("");
      return value;
    } catch (const std::exception&) {
      throw CLI::ValidationError(
          "SIMPLEX_MAX_NODES", "must be a positive integer, got: " +
                                   std::string(env));
    }
  }
  return SizeGuard{}.max_nodes;
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw CLI::ValidationError("--out", "cannot open for writing: " +
                                            out_path);
  }
  file << payload;
}

// ---- eval ------------------------------------------------------------

const std::vector<std::string>& eval_names() {
  static const std::vector<std::string> names = {
      "nodes",
      "edges",
      "new-nodes",
      "independence",
      "domination",
      "chromatic-number",
      "chromatic-poly",
      "tutte-poly",
      "acyclic",
      "root-connected-acyclic",
      "perfect-matchings",
      "matching-profile",
      "spanning-trees",
  };
  return names;
}

bool needs_even_q(const std::string& name) {
  return name == "perfect-matchings" || name == "matching-profile";
}

std::string eval_one(FamilyParams p, const std::string& name) {
  if (name == "nodes") return to_decimal(node_count(p));
  if (name == "edges") return to_decimal(edge_count(p));
  if (name == "new-nodes") return to_decimal(new_node_count(p));
  if (name == "independence") return to_decimal(independence_number(p));
  if (name == "domination") return to_decimal(domination_number(p));
  if (name == "chromatic-number") return to_decimal(chromatic_number(p));
  if (name == "chromatic-poly") return chromatic_polynomial(p).to_string();
  if (name == "tutte-poly") return tutte_x_axis(p).to_string();
  if (name == "acyclic") return to_decimal(acyclic_orientations(p));
  if (name == "root-connected-acyclic") {
    return to_decimal(root_connected_acyclic(p));
  }
  if (name == "perfect-matchings") return to_decimal(perfect_matchings(p));
  if (name == "matching-profile") {
    MatchingProfile profile = matching_profile_recursive(p);
    return "hubs_vacant=" + to_decimal(profile.hubs_vacant) +
           " perfect=" + to_decimal(profile.perfect);
  }
  if (name == "spanning-trees") return to_decimal(spanning_trees(p));
  throw std::invalid_argument("unknown invariant: " + name);
}

int run_eval(FamilyParams p, std::vector<std::string> requested,
             const std::string& format, const std::string& out_path) {
  validate(p);
  bool explicit_single = requested.size() == 1 && requested[0] != "all";
  std::vector<std::string> names;
  for (const auto& name : requested) {
    if (name == "all") {
      for (const auto& known : eval_names()) {
        // "all" quietly omits even-q-only invariants on odd q; asking for
        // them by name is still an error.
        if (p.q % 2 != 0 && needs_even_q(known)) continue;
        names.push_back(known);
      }
    } else {
      names.push_back(name);
    }
  }
  for (const auto& name : names) {
    if (std::find(eval_names().begin(), eval_names().end(), name) ==
        eval_names().end()) {
      std::cerr << "error: unknown invariant: " << name << "\n";
      return 2;
    }
    if (p.q % 2 != 0 && needs_even_q(name)) {
      std::cerr << "error: " << name
                << " requires even q (odd q gives an odd node count at "
                   "every odd generation; no formula applies)\n";
      return 2;
    }
  }

  std::vector<std::pair<std::string, std::string>> values;
  values.reserve(names.size());
  for (const auto& name : names) values.emplace_back(name, eval_one(p, name));

  std::string payload;
  if (format == "table") {
    if (explicit_single) {
      payload = values.front().second + "\n";
    } else {
      std::size_t width = 0;
      for (const auto& [name, value] : values) {
        width = std::max(width, name.size());
      }
      for (const auto& [name, value] : values) {
        payload += name + std::string(width - name.size(), ' ') + "  " +
                   value + "\n";
      }
    }
  } else if (format == "csv") {
    payload = "invariant,value\n";
    for (const auto& [name, value] : values) {
      payload += name + "," + value + "\n";
    }
  } else {  // json
    nlohmann::ordered_json doc;
    doc["q"] = p.q;
    doc["g"] = p.g;
    doc["values"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : values) {
      if (name == "matching-profile") {
        MatchingProfile profile = matching_profile_recursive(p);
        doc["values"][name] = {
            {"hubs_vacant", to_decimal(profile.hubs_vacant)},
            {"perfect", to_decimal(profile.perfect)}};
      } else {
        doc["values"][name] = value;
      }
    }
    payload = doc.dump(2) + "\n";
  }
  write_output(out_path, payload);
  return 0;
}

// ---- degrees ---------------------------------------------------------

int run_degrees(FamilyParams p, const std::string& out_path) {
  validate(p);
  DegreeCensus census = degree_census(p);

  std::vector<std::array<std::string, 3>> rows;
  rows.push_back({"generation", "degree", "count"});
  for (const auto& row : census.rows) {
    rows.push_back({std::to_string(row.generation), to_decimal(row.degree),
                    to_decimal(row.count)});
  }
  std::array<std::size_t, 3> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 3; ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string payload;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 3; ++c) {
      payload += row[c];
      if (c + 1 < 3) payload += std::string(width[c] - row[c].size() + 2, ' ');
    }
    payload += "\n";
  }
  payload += "total nodes: " + to_decimal(census.total_nodes()) + "\n";
  payload += "total degree: " + to_decimal(census.total_degree()) + " (2 x " +
             to_decimal(edge_count(p)) + " edges)\n";
  write_output(out_path, payload);
  return 0;
}

// ---- generate / verify -----------------------------------------------

int run_generate(FamilyParams p, const std::string& format,
                 const std::string& out_path, std::size_t max_nodes) {
  Graph g = build_corona(p, SizeGuard{max_nodes});
  std::ostringstream out;
  if (format == "edgelist") {
    write_edgelist(out, g, p);
  } else if (format == "dot") {
    write_dot(out, g, p);
  } else {
    write_graph_json(out, g, p);
  }
  write_output(out_path, out.str());
  return 0;
}

int run_verify(const std::string& q_range, const std::string& g_range,
               std::vector<std::string> check_names,
               const std::string& format, const std::string& out_path,
               const OracleBudget& budget) {
  std::vector<CheckKind> checks;
  for (const auto& name : check_names) {
    if (name == "all") {
      checks.assign(kAllChecks.begin(), kAllChecks.end());
      break;
    }
    auto kind = parse_check(name);
    if (!kind) {
      std::cerr << "error: unknown check: " << name << "\n";
      return 2;
    }
    checks.push_back(*kind);
  }

  VerificationReport report;
  if (q_range.empty() != g_range.empty()) {
    std::cerr << "error: --q and --g must be given together\n";
    return 2;
  }
  if (q_range.empty()) {
    report = run_cells(default_grid_points(), checks, budget);
  } else {
    report = run_grid(parse_range(q_range), parse_range(g_range), checks,
                      budget);
  }

  ReportFormat rf = ReportFormat::text;
  if (format == "json") rf = ReportFormat::json;
  if (format == "csv") rf = ReportFormat::csv;
  write_output(out_path, report_render(report, rf));
  return exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact invariants of the iterated clique-expansion graph family"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand(
      "generate", "Build a family graph and write it to a file or stdout");
  unsigned gen_q = 1;
  unsigned gen_g = 0;
  std::string gen_format = "edgelist";
  std::string gen_out;
  std::size_t gen_max_nodes = 0;
  generate->add_option("--q", gen_q, "Clique parameter q >= 1")->required();
  generate->add_option("--g", gen_g, "Expansion rounds g >= 0")->required();
  generate->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember({"edgelist", "dot", "json"}))
      ->capture_default_str();
  generate->add_option("--out", gen_out, "Output path (default stdout)");
  generate->add_option("--max-nodes", gen_max_nodes,
                       "Size guard override (default 200000 or "
                       "SIMPLEX_MAX_NODES)");

  // eval
  auto* eval = app.add_subcommand(
      "eval", "Print closed-form invariant values, no graph is built");
  unsigned eval_q = 1;
  unsigned eval_g = 0;
  std::vector<std::string> eval_checks{"all"};
  std::string eval_format = "table";
  std::string eval_out;
  eval->add_option("--q", eval_q, "Clique parameter q >= 1")->required();
  eval->add_option("--g", eval_g, "Expansion rounds g >= 0")->required();
  eval->add_option("--checks", eval_checks,
                   "Invariants to evaluate (or \"all\")")
      ->delimiter(',');
  eval->add_option("--format", eval_format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  eval->add_option("--out", eval_out, "Output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Compare closed forms against oracles over a (q,g) grid");
  std::string verify_q;
  std::string verify_g;
  std::vector<std::string> verify_checks{"all"};
  std::string verify_format = "text";
  std::string verify_out;
  OracleBudget budget;
  verify->add_option("--q", verify_q,
                     "q values, single or range \"a..b\" (default grid "
                     "when omitted)");
  verify->add_option("--g", verify_g, "g values, single or range \"a..b\"");
  verify->add_option("--checks", verify_checks,
                     "Checks to run (or \"all\")")
      ->delimiter(',');
  verify->add_option("--format", verify_format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  verify->add_option("--out", verify_out, "Report path (default stdout)");
  verify->add_option("--max-nodes", budget.max_nodes,
                     "Oracle node ceiling")
      ->capture_default_str();
  verify->add_option("--max-edges", budget.max_edges,
                     "Oracle edge ceiling (2^m enumerations)")
      ->capture_default_str();
  verify->add_option("--max-steps", budget.max_steps,
                     "Oracle search-step ceiling")
      ->capture_default_str();

  // degrees
  auto* degrees = app.add_subcommand(
      "degrees", "Print the per-generation degree census");
  unsigned deg_q = 1;
  unsigned deg_g = 0;
  std::string deg_out;
  degrees->add_option("--q", deg_q, "Clique parameter q >= 1")->required();
  degrees->add_option("--g", deg_g, "Expansion rounds g >= 0")->required();
  degrees->add_option("--out", deg_out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      std::size_t guard =
          gen_max_nodes != 0 ? gen_max_nodes : size_guard_from_env();
      return run_generate({gen_q, gen_g}, gen_format, gen_out, guard);
    }
    if (eval->parsed()) {
      return run_eval({eval_q, eval_g}, eval_checks, eval_format, eval_out);
    }
    if (verify->parsed()) {
      return run_verify(verify_q, verify_g, verify_checks, verify_format,
                        verify_out, budget);
    }
    if (degrees->parsed()) {
      return run_degrees({deg_q, deg_g}, deg_out);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
