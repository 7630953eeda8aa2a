#include "simplex/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "simplex/closed_form.hpp"
#include "simplex/graph.hpp"

namespace simplex {

namespace {

using OrderedJson = nlohmann::ordered_json;

struct NameEntry {
  CheckKind kind;
  std::string_view name;
};

constexpr std::array<NameEntry, 12> kNames = {{
    {CheckKind::independence, "independence"},
    {CheckKind::domination, "domination"},
    {CheckKind::chromatic_number, "chromatic-number"},
    {CheckKind::chromatic_poly, "chromatic-poly"},
    {CheckKind::acyclic, "acyclic"},
    {CheckKind::root_connected_acyclic, "root-connected-acyclic"},
    {CheckKind::perfect_matchings, "perfect-matchings"},
    {CheckKind::matching_profile, "matching-profile"},
    {CheckKind::spanning_trees, "spanning-trees"},
    {CheckKind::construction_equivalence, "construction-equivalence"},
    {CheckKind::degree_census, "degree-census"},
    {CheckKind::tutte_identity, "tutte-identity"},
}};

struct GraphBundle {
  std::shared_ptr<const Graph> corona;
  std::shared_ptr<const Graph> join;
  std::string corona_error;
  std::string join_error;
};

struct CellContext {
  FamilyParams params;
  OracleBudget budget;
  const GraphBundle* graphs;
};

const Graph& need_corona(const CellContext& ctx) {
  if (!ctx.graphs->corona) throw BudgetError(ctx.graphs->corona_error);
  return *ctx.graphs->corona;
}

const Graph& need_join(const CellContext& ctx) {
  if (!ctx.graphs->join) throw BudgetError(ctx.graphs->join_error);
  return *ctx.graphs->join;
}

void fail(CheckResult& r, std::string reason) {
  r.status = CheckStatus::fail;
  r.reason = std::move(reason);
}

/// Pass iff both values are present and equal; callers that detected a more
/// specific problem set a fail reason beforehand and skip this.
void compare_values(CheckResult& r) {
  if (r.closed_form && r.oracle && *r.closed_form == *r.oracle) {
    r.status = CheckStatus::pass;
  } else {
    fail(r, "closed form and oracle disagree");
  }
}

bool hub_subset_dominates(const Graph& g, const std::vector<NodeId>& subset) {
  std::vector<char> covered(g.node_count(), 0);
  for (NodeId v : subset) {
    covered[v] = 1;
    for (NodeId w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c != 0; });
}

void check_independence(CheckResult& r, const CellContext& ctx) {
  r.closed_form = independence_number(ctx.params);
  r.oracle = max_independent_set(need_corona(ctx), ctx.budget);
  compare_values(r);
}

void check_domination(CheckResult& r, const CellContext& ctx) {
  r.closed_form = domination_number(ctx.params);
  const Graph& g = need_corona(ctx);
  r.oracle = min_dominating_set(g, ctx.budget);
  compare_values(r);
  if (r.status != CheckStatus::pass || ctx.params.g != 1) return;

  // One round in: dropping some single hub must leave a dominating set of
  // the remaining q+1 hubs.
  std::vector<NodeId> hubs = hub_nodes(g);
  bool found = false;
  for (std::size_t drop = 0; drop < hubs.size() && !found; ++drop) {
    std::vector<NodeId> subset;
    for (std::size_t i = 0; i < hubs.size(); ++i) {
      if (i != drop) subset.push_back(hubs[i]);
    }
    found = hub_subset_dominates(g, subset);
  }
  if (!found) {
    fail(r, "no (q+1)-subset of the hubs dominates the one-round graph");
  }
}

void check_chromatic_number(CheckResult& r, const CellContext& ctx) {
  r.closed_form = chromatic_number(ctx.params);
  const Graph& g = need_corona(ctx);
  for (unsigned colors = 1; colors <= ctx.params.q + 3; ++colors) {
    if (has_proper_coloring(g, colors, ctx.budget)) {
      r.oracle = colors;
      break;
    }
  }
  if (!r.oracle) {
    fail(r, "no proper coloring found with up to q+3 colors");
    return;
  }
  compare_values(r);
}

void check_chromatic_poly(CheckResult& r, const CellContext& ctx) {
  const unsigned q = ctx.params.q;
  FactoredPolynomial fp = chromatic_polynomial(ctx.params);
  r.closed_form =
      require_integer(eval_polynomial(fp, BigRat(q + 2)), "coloring count");
  const Graph& g = need_corona(ctx);

  for (unsigned colors = q + 1; colors <= q + 3; ++colors) {
    BigInt predicted =
        require_integer(eval_polynomial(fp, BigRat(colors)), "coloring count");
    BigInt counted = count_proper_colorings(g, colors, ctx.budget);
    if (colors == q + 2) r.oracle = counted;
    if (predicted != counted) {
      fail(r, "coloring count differs at " + std::to_string(colors) +
                  " colors: formula " + predicted.str() + ", oracle " +
                  counted.str());
      return;
    }
  }

  // Full coefficient comparison where deletion-contraction is feasible.
  if (g.edge_count() <= 12 && g.edge_count() <= ctx.budget.max_edges) {
    if (chromatic_polynomial_dc(g, ctx.budget) != expand_polynomial(fp)) {
      fail(r, "expanded coefficients differ from deletion-contraction");
      return;
    }
  }
  r.status = CheckStatus::pass;
}

void check_acyclic(CheckResult& r, const CellContext& ctx) {
  r.closed_form = acyclic_orientations(ctx.params);
  r.oracle = count_acyclic_orientations(need_corona(ctx), ctx.budget);
  compare_values(r);
}

void check_root_connected(CheckResult& r, const CellContext& ctx) {
  r.closed_form = root_connected_acyclic(ctx.params);
  const Graph& g = need_corona(ctx);
  BigInt at_root0 = count_root_connected_acyclic(g, 0, ctx.budget);
  r.oracle = at_root0;
  for (NodeId root = 1; root < g.node_count(); ++root) {
    if (count_root_connected_acyclic(g, root, ctx.budget) != at_root0) {
      fail(r, "count depends on the root, at root " + std::to_string(root));
      return;
    }
  }
  compare_values(r);
}

void check_perfect_matchings(CheckResult& r, const CellContext& ctx) {
  if (ctx.params.q % 2 == 0) {
    r.closed_form = perfect_matchings(ctx.params);
  } else if (node_count(ctx.params) % 2 != 0) {
    r.closed_form = 0;  // odd node count: parity forbids perfect matchings
  } else {
    r.status = CheckStatus::skipped_precondition;
    r.reason =
        "no closed form: odd q with even node count carries no claim";
    return;
  }
  r.oracle = count_perfect_matchings(need_corona(ctx), ctx.budget);
  compare_values(r);
}

void check_matching_profile(CheckResult& r, const CellContext& ctx) {
  if (ctx.params.q % 2 != 0) {
    r.status = CheckStatus::skipped_precondition;
    r.reason = "matching profile recursion is defined for even q only";
    return;
  }
  MatchingProfile predicted = matching_profile_recursive(ctx.params);
  r.closed_form = predicted.perfect;
  const Graph& g = need_corona(ctx);
  std::vector<NodeId> hubs = hub_nodes(g);
  MatchingProfile counted =
      matching_profile_oracle(g, hubs[0], hubs[1], ctx.budget);
  r.oracle = counted.perfect;

  if (counted != predicted) {
    fail(r, "profile differs: recursion (" + predicted.hubs_vacant.str() +
                "," + predicted.perfect.str() + "), oracle (" +
                counted.hubs_vacant.str() + "," + counted.perfect.str() +
                ")");
    return;
  }
  BigInt ratio_rhs =
      predicted.hubs_vacant * int_pow(ctx.params.q + 1, ctx.params.g + 1);
  if (predicted.perfect != ratio_rhs) {
    fail(r, "ratio law perfect = hubs_vacant*(q+1)^(g+1) violated");
    return;
  }
  if (perfect_matchings(ctx.params) != predicted.perfect) {
    fail(r, "recursion disagrees with the closed form");
    return;
  }
  // No matching may cover everything except exactly one hub.
  for (NodeId h : {hubs[0], hubs[1]}) {
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (v != h) keep.push_back(v);
    }
    if (count_perfect_matchings(induced_subgraph(g, keep), ctx.budget) != 0) {
      fail(r, "found a matching leaving only hub " + std::to_string(h) +
                  " vacant");
      return;
    }
  }
  r.status = CheckStatus::pass;
}

void check_spanning_trees(CheckResult& r, const CellContext& ctx) {
  r.closed_form = spanning_trees(ctx.params);
  if (spanning_trees_recursive(ctx.params) != *r.closed_form) {
    fail(r, "product recursion disagrees with the exponent form");
    return;
  }
  r.oracle = count_spanning_trees_mt(need_corona(ctx));
  compare_values(r);
}

void check_construction(CheckResult& r, const CellContext& ctx) {
  r.closed_form = spanning_trees(ctx.params);
  const Graph& corona = need_corona(ctx);
  const Graph& join = need_join(ctx);

  if (corona.node_count() != join.node_count() ||
      corona.edge_count() != join.edge_count()) {
    fail(r, "node/edge counts differ between constructions");
    return;
  }
  if (corona.degree_sequence() != join.degree_sequence()) {
    fail(r, "degree sequences differ between constructions");
    return;
  }
  if (triangle_count(corona) != triangle_count(join)) {
    fail(r, "triangle counts differ between constructions");
    return;
  }
  BigInt st_corona = count_spanning_trees_mt(corona);
  BigInt st_join = count_spanning_trees_mt(join);
  r.oracle = st_join;
  if (st_corona != st_join) {
    fail(r, "spanning-tree counts differ between constructions");
    return;
  }
  if (*r.closed_form != st_corona) {
    fail(r, "spanning-tree formula disagrees with both constructions");
    return;
  }
  if (corona.node_count() <= 16 && !isomorphic(corona, join, ctx.budget)) {
    fail(r, "canonical forms differ: constructions not isomorphic");
    return;
  }
  r.status = CheckStatus::pass;
}

void check_degree_census(CheckResult& r, const CellContext& ctx) {
  DegreeCensus census = degree_census(ctx.params);
  r.closed_form = census.total_nodes();
  const Graph& g = need_corona(ctx);
  r.oracle = BigInt(g.node_count());

  std::map<std::pair<unsigned, std::size_t>, BigInt> actual;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    actual[{g.meta(v).generation, g.degree(v)}] += 1;
  }
  std::map<std::pair<unsigned, std::size_t>, BigInt> predicted;
  for (const auto& row : census.rows) {
    predicted[{row.generation, row.degree.convert_to<std::size_t>()}] =
        row.count;
  }
  if (actual != predicted) {
    fail(r, "per-generation (degree, count) table differs from the graph");
    return;
  }
  if (census.total_degree() != BigInt(2) * g.edge_count()) {
    fail(r, "census total degree does not equal twice the edge count");
    return;
  }
  compare_values(r);
}

void check_tutte_identity(CheckResult& r, const CellContext& ctx) {
  FactoredPolynomial chrom = chromatic_polynomial(ctx.params);
  FactoredPolynomial tutte = tutte_x_axis(ctx.params);
  r.closed_form = require_integer(
      eval_polynomial(chrom, BigRat(ctx.params.q + 2)), "coloring count");

  const Graph& g = need_corona(ctx);
  const std::size_t n = g.node_count();
  if (n > 255) {
    throw BudgetError(
        "tutte-identity: not verified at this size (sweep needs n+1 "
        "evaluations, n=" +
        std::to_string(n) + " above 255)");
  }
  RankNullity rn = rank_nullity(g);
  const std::size_t components = n - rn.rank;
  const bool odd_node_count = n % 2 != 0;

  // Degree of both sides is n, so agreeing on 0..n proves the identity.
  for (std::size_t lambda = 0; lambda <= n; ++lambda) {
    BigRat lhs = eval_polynomial(chrom, BigRat(lambda));
    BigRat rhs = rat_pow(-BigRat(lambda), BigInt(components)) *
                 eval_polynomial(tutte, BigRat(1) - BigRat(lambda));
    if (odd_node_count) rhs = -rhs;
    if (lambda == ctx.params.q + 2) {
      r.oracle = require_integer(rhs, "identity right-hand side");
    }
    if (lhs != rhs) {
      fail(r, "identity fails at " + std::to_string(lambda) + " colors");
      return;
    }
  }
  compare_values(r);
}

CheckResult evaluate_cell(CheckKind kind, const CellContext& ctx) {
  CheckResult r;
  r.kind = kind;
  r.params = ctx.params;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (kind) {
      case CheckKind::independence: check_independence(r, ctx); break;
      case CheckKind::domination: check_domination(r, ctx); break;
      case CheckKind::chromatic_number: check_chromatic_number(r, ctx); break;
      case CheckKind::chromatic_poly: check_chromatic_poly(r, ctx); break;
      case CheckKind::acyclic: check_acyclic(r, ctx); break;
      case CheckKind::root_connected_acyclic:
        check_root_connected(r, ctx);
        break;
      case CheckKind::perfect_matchings:
        check_perfect_matchings(r, ctx);
        break;
      case CheckKind::matching_profile: check_matching_profile(r, ctx); break;
      case CheckKind::spanning_trees: check_spanning_trees(r, ctx); break;
      case CheckKind::construction_equivalence:
        check_construction(r, ctx);
        break;
      case CheckKind::degree_census: check_degree_census(r, ctx); break;
      case CheckKind::tutte_identity: check_tutte_identity(r, ctx); break;
    }
  } catch (const BudgetError& e) {
    r.status = CheckStatus::skipped_budget;
    r.reason = e.what();
  } catch (const std::exception& e) {
    r.status = CheckStatus::fail;
    r.reason = std::string("error: ") + e.what();
  }
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
             .count();
  return r;
}

GraphBundle build_bundle(FamilyParams p, bool with_join) {
  GraphBundle bundle;
  try {
    bundle.corona = std::make_shared<const Graph>(build_corona(p));
  } catch (const std::exception& e) {
    bundle.corona_error = e.what();
  }
  if (with_join) {
    try {
      bundle.join = std::make_shared<const Graph>(build_join(p));
    } catch (const std::exception& e) {
      bundle.join_error = e.what();
    }
  }
  return bundle;
}

}  // namespace

std::string_view check_name(CheckKind kind) {
  for (const auto& entry : kNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.kind;
  }
  return std::nullopt;
}

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped_budget: return "skipped-budget";
    case CheckStatus::skipped_precondition: return "skipped-precondition";
  }
  return "unknown";
}

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(),
                    [status](const CheckResult& c) {
                      return c.status == status;
                    }));
}

std::vector<FamilyParams> default_grid_points() {
  return {{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}, {3, 1}};
}

VerificationReport run_cells(const std::vector<FamilyParams>& points,
                             const std::vector<CheckKind>& checks,
                             const OracleBudget& budget) {
  if (points.empty() || checks.empty()) {
    throw std::invalid_argument("run_cells: empty grid");
  }
  for (FamilyParams p : points) validate(p);

  const bool with_join =
      std::find(checks.begin(), checks.end(),
                CheckKind::construction_equivalence) != checks.end();

  std::map<std::pair<unsigned, unsigned>, GraphBundle> bundles;
  for (FamilyParams p : points) {
    auto key = std::make_pair(p.q, p.g);
    if (!bundles.count(key)) bundles.emplace(key, build_bundle(p, with_join));
  }

  struct Job {
    CheckKind kind;
    FamilyParams params;
    const GraphBundle* graphs;
  };
  std::vector<Job> jobs;
  for (const auto& [key, bundle] : bundles) {
    for (CheckKind kind : checks) {
      jobs.push_back({kind, {key.first, key.second}, &bundle});
    }
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return std::tuple(a.params.q, a.params.g, check_name(a.kind)) <
           std::tuple(b.params.q, b.params.g, check_name(b.kind));
  });

  VerificationReport report;
  report.cells.resize(jobs.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < jobs.size();
         i = cursor.fetch_add(1)) {
      CellContext ctx{jobs[i].params, budget, jobs[i].graphs};
      report.cells[i] = evaluate_cell(jobs[i].kind, ctx);
    }
  };

  std::size_t threads = std::thread::hardware_concurrency();
  threads = std::max<std::size_t>(1, std::min(threads, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

VerificationReport run_grid(const std::vector<unsigned>& qs,
                            const std::vector<unsigned>& gs,
                            const std::vector<CheckKind>& checks,
                            const OracleBudget& budget) {
  if (qs.empty() || gs.empty()) {
    throw std::invalid_argument("run_grid: empty parameter range");
  }
  std::vector<FamilyParams> points;
  points.reserve(qs.size() * gs.size());
  for (unsigned q : qs) {
    for (unsigned g : gs) points.push_back({q, g});
  }
  return run_cells(points, checks, budget);
}

CheckResult run_check(const CheckSpec& spec) {
  validate(spec.params);
  GraphBundle bundle = build_bundle(
      spec.params, spec.kind == CheckKind::construction_equivalence);
  CellContext ctx{spec.params, spec.budget, &bundle};
  return evaluate_cell(spec.kind, ctx);
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_text(const VerificationReport& report) {
  const std::array<std::string, 6> header = {"q",      "g",      "check",
                                             "status", "closed_form",
                                             "oracle"};
  std::vector<std::array<std::string, 6>> rows;
  rows.reserve(report.cells.size());
  for (const auto& cell : report.cells) {
    rows.push_back({std::to_string(cell.params.q),
                    std::to_string(cell.params.g),
                    std::string(check_name(cell.kind)),
                    std::string(status_name(cell.status)),
                    cell.closed_form ? to_decimal(*cell.closed_form) : "-",
                    cell.oracle ? to_decimal(*cell.oracle) : "-"});
  }
  std::array<std::size_t, 6> width{};
  for (std::size_t c = 0; c < 6; ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 6; ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }

  std::ostringstream out;
  auto emit = [&](const std::array<std::string, 6>& row,
                  const std::string& trailer) {
    for (std::size_t c = 0; c < 6; ++c) {
      out << row[c];
      if (c + 1 < 6 || !trailer.empty()) {
        out << std::string(width[c] - row[c].size() + 2, ' ');
      }
    }
    out << trailer << '\n';
  };
  emit(header, "reason");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    emit(rows[i], report.cells[i].reason);
  }
  out << "summary: " << report.cells.size() << " cells, "
      << report.count(CheckStatus::pass) << " pass, "
      << report.count(CheckStatus::fail) << " fail, "
      << report.count(CheckStatus::skipped_budget) << " skipped-budget, "
      << report.count(CheckStatus::skipped_precondition)
      << " skipped-precondition\n";
  return out.str();
}

std::string render_json(const VerificationReport& report) {
  OrderedJson doc;
  doc["cells"] = OrderedJson::array();
  for (const auto& cell : report.cells) {
    OrderedJson item;
    item["q"] = cell.params.q;
    item["g"] = cell.params.g;
    item["check"] = std::string(check_name(cell.kind));
    item["status"] = std::string(status_name(cell.status));
    item["closed_form"] = cell.closed_form
                              ? OrderedJson(to_decimal(*cell.closed_form))
                              : OrderedJson(nullptr);
    item["oracle"] =
        cell.oracle ? OrderedJson(to_decimal(*cell.oracle)) : OrderedJson(nullptr);
    item["ms"] = cell.ms;
    if (!cell.reason.empty()) item["reason"] = cell.reason;
    doc["cells"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& report) {
  std::string out = "q,g,check,status,closed_form,oracle,ms,reason\n";
  for (const auto& cell : report.cells) {
    out += std::to_string(cell.params.q) + ',' +
           std::to_string(cell.params.g) + ',' +
           std::string(check_name(cell.kind)) + ',' +
           std::string(status_name(cell.status)) + ',' +
           (cell.closed_form ? to_decimal(*cell.closed_form) : "") + ',' +
           (cell.oracle ? to_decimal(*cell.oracle) : "") + ',' +
           std::to_string(cell.ms) + ',' + csv_escape(cell.reason) + '\n';
  }
  return out;
}

}  // namespace

std::string report_render(const VerificationReport& report, ReportFormat f) {
  switch (f) {
    case ReportFormat::text: return render_text(report);
    case ReportFormat::json: return render_json(report);
    case ReportFormat::csv: return render_csv(report);
  }
  throw std::invalid_argument("report_render: unknown format");
}

VerificationReport report_from_json(const std::string& text) {
  OrderedJson doc = OrderedJson::parse(text);
  VerificationReport report;
  for (const auto& item : doc.at("cells")) {
    CheckResult cell;
    cell.params.q = item.at("q").get<unsigned>();
    cell.params.g = item.at("g").get<unsigned>();
    auto kind = parse_check(item.at("check").get<std::string>());
    if (!kind) {
      throw std::invalid_argument("report_from_json: unknown check name");
    }
    cell.kind = *kind;
    std::string status = item.at("status").get<std::string>();
    bool known = false;
    for (CheckStatus s :
         {CheckStatus::pass, CheckStatus::fail, CheckStatus::skipped_budget,
          CheckStatus::skipped_precondition}) {
      if (status == status_name(s)) {
        cell.status = s;
        known = true;
      }
    }
    if (!known) {
      throw std::invalid_argument("report_from_json: unknown status");
    }
    if (!item.at("closed_form").is_null()) {
      cell.closed_form = BigInt(item.at("closed_form").get<std::string>());
    }
    if (!item.at("oracle").is_null()) {
      cell.oracle = BigInt(item.at("oracle").get<std::string>());
    }
    cell.ms = item.at("ms").get<std::int64_t>();
    if (item.contains("reason")) {
      cell.reason = item.at("reason").get<std::string>();
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

int exit_code_for(const VerificationReport& report) {
  return report.all_passed() ? 0 : 1;
}

}  // namespace simplex
