#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rmcode/codes.hpp"
#include "rmcode/variety.hpp"

namespace rmcode {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "rmcode";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "rmcode-report/1";

struct AnalysisOptions {
  std::optional<std::string> order;  // overrides the file's order line
  bool affine = false;               // input rows are affine points; analyse the closure
  std::vector<std::pair<int, int>> ghw;  // (d, r) cells to compute
  bool weight_matrix = false;
  bool footprint = false;
  bool duality = false;
  bool selfdual = false;
  bool gorenstein = false;
  std::optional<std::string> h;      // linear form for the Artinian reduction
  Budgets budgets;
  bool timing = false;
};

/// Outcome class of a run, in increasing severity.
enum class Verdict { Ok = 0, CriterionFalse = 1, InputError = 2, BudgetExceeded = 3, Inconsistent = 4 };

struct Analysis {
  Json report;
  Verdict verdict = Verdict::Ok;  // worst per-analysis error; CriterionFalse when a requested criterion is false
};

/// Runs the pipeline on a parsed points file. Input errors in the file itself
/// (points, field, order) propagate as exceptions; failures inside a requested
/// analysis are recorded under "errors" and the other analyses still run.
Analysis analyze(const PointsFile& input, const AnalysisOptions& opts);

/// Plain-text rendering of a report.
std::string format_table(const Json& report);

/// Exit status for a verdict; CriterionFalse maps to 0 unless `strict`.
int exit_code(Verdict v, bool strict);

/// Validates `doc` against a JSON Schema subset: type, properties, required,
/// additionalProperties (bool or schema), items, enum, minimum, anyOf, $ref to
/// "#/definitions/...". Returns one message per violation, empty when valid.
std::vector<std::string> validate_schema(const Json& schema, const Json& doc);

}  // namespace rmcode
