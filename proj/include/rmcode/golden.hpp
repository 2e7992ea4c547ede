#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmcode/report.hpp"

namespace rmcode {

/// One corpus entry: a points file plus the expected values to compare.
struct GoldenCase {
  std::string name;
  std::string points_text;
  Json expected;
};

struct GoldenResult {
  std::string name;
  bool passed = false;
  int checks = 0;                  // number of expected keys compared
  std::vector<std::string> diffs;  // "key: expected ..., got ..."
  double seconds = 0;
};

/// Loads golden/<name>/points.txt and expected.json for every subdirectory,
/// sorted by name; `filter` keeps only the entry with that name.
std::vector<GoldenCase> load_golden(const std::filesystem::path& root,
                                    const std::optional<std::string>& filter = std::nullopt);

/// Compares the expected keys that are present. Ideals are compared as
/// reduced Groebner bases, indicator functions and beta up to a scalar, and
/// the rest exactly. Library errors become diffs.
GoldenResult run_golden_case(const GoldenCase& c);

/// Directory holding the corpus shipped with the sources.
std::filesystem::path default_golden_dir();

}  // namespace rmcode
