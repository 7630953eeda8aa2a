#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplex/bigint.hpp"
#include "simplex/family.hpp"
#include "simplex/oracles.hpp"

namespace simplex {

enum class CheckKind {
  independence,
  domination,
  chromatic_number,
  chromatic_poly,
  acyclic,
  root_connected_acyclic,
  perfect_matchings,
  matching_profile,
  spanning_trees,
  construction_equivalence,
  degree_census,
  tutte_identity,
};

inline constexpr std::array<CheckKind, 12> kAllChecks = {
    CheckKind::independence,
    CheckKind::domination,
    CheckKind::chromatic_number,
    CheckKind::chromatic_poly,
    CheckKind::acyclic,
    CheckKind::root_connected_acyclic,
    CheckKind::perfect_matchings,
    CheckKind::matching_profile,
    CheckKind::spanning_trees,
    CheckKind::construction_equivalence,
    CheckKind::degree_census,
    CheckKind::tutte_identity,
};

std::string_view check_name(CheckKind kind);
std::optional<CheckKind> parse_check(std::string_view name);

enum class CheckStatus {
  pass,
  fail,
  skipped_budget,        // oracle or construction over budget
  skipped_precondition,  // no formula claims this cell (odd-q matchings)
};

std::string_view status_name(CheckStatus status);

struct CheckSpec {
  CheckKind kind;
  FamilyParams params;
  OracleBudget budget;
};

struct CheckResult {
  CheckKind kind;
  FamilyParams params;
  CheckStatus status = CheckStatus::fail;
  std::optional<BigInt> closed_form;  // absent only for precondition skips
  std::optional<BigInt> oracle;
  std::string reason;  // mismatch detail or skip reason; empty on plain pass
  std::int64_t ms = 0;
};

/// Cells ordered by (q, g, check name) regardless of execution order.
struct VerificationReport {
  std::vector<CheckResult> cells;

  std::size_t count(CheckStatus status) const;
  bool all_passed() const { return count(CheckStatus::fail) == 0; }
};

/// Full product q_range x g_range x checks.
VerificationReport run_grid(const std::vector<unsigned>& qs,
                            const std::vector<unsigned>& gs,
                            const std::vector<CheckKind>& checks,
                            const OracleBudget& budget = {});

/// Explicit (q,g) points; the default grid is not a full product.
VerificationReport run_cells(const std::vector<FamilyParams>& points,
                             const std::vector<CheckKind>& checks,
                             const OracleBudget& budget = {});

/// q in {1,2,3} x g in {0,1}, plus (1,2).
std::vector<FamilyParams> default_grid_points();

/// One cell in isolation; builds its own graphs.
CheckResult run_check(const CheckSpec& spec);

enum class ReportFormat { text, json, csv };

/// Deterministic for fixed report contents. The text format carries no
/// timings, so repeated runs are byte-identical; json and csv include the
/// measured ms per cell (informational).
std::string report_render(const VerificationReport& report, ReportFormat f);

VerificationReport report_from_json(const std::string& text);

/// 0 iff no fail entries.
int exit_code_for(const VerificationReport& report);

}  // namespace simplex
