#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rmcode/golden.hpp"
#include "rmcode/report.hpp"
#include "support.hpp"

using namespace rmcode;

namespace {

PointsFile corpus_points(const std::string& name) {
  std::ifstream in(default_golden_dir() / name / "points.txt");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_points_file(ss.str());
}

Json load_schema() {
  std::ifstream in(RMCODE_SCHEMA_PATH);
  REQUIRE(in.good());
  return Json::parse(in);
}

AnalysisOptions everything() {
  AnalysisOptions o;
  o.ghw = {{1, 1}, {2, 2}, {1, 7}};
  o.weight_matrix = o.footprint = o.duality = o.selfdual = o.gorenstein = true;
  return o;
}

}  // namespace

TEST_CASE("report for the five-point Gorenstein set") {
  AnalysisOptions o;
  o.duality = o.gorenstein = true;
  const Analysis a = analyze(corpus_points("gorenstein-five-points-nonci-f3"), o);
  CHECK(a.verdict == Verdict::Ok);
  const Json& r = a.report["results"];
  CHECK(r["duality"]["holds"] == true);
  // Normalized to end in 1: -(-1,-1,-1,1,-1).
  CHECK(r["duality"]["beta"] == Json({"1", "1", "1", "-1", "1"}));
  CHECK(r["gorenstein"]["gorenstein"] == true);
  CHECK(r["gorenstein"]["complete_intersection"] == false);
  CHECK(r["gorenstein"]["crosscheck"] == true);
  CHECK(r["hilbert"]["h"] == Json({1, 3, 1}));
  CHECK(a.report["errors"].empty());
  CHECK(exit_code(a.verdict, true) == 0);
}

TEST_CASE("reports validate against the shipped schema and are deterministic") {
  const Json schema = load_schema();
  for (const char* name : {"ten-points-p2-glex-f3", "projective-plane-f3", "selfdual-six-points-f4", "torus-p1-f5"}) {
    CAPTURE(name);
    const PointsFile input = corpus_points(name);
    const Analysis a = analyze(input, everything());
    const auto problems = validate_schema(schema, a.report);
    CHECK(problems.empty());
    for (const auto& p : problems) MESSAGE(p);
    CHECK(analyze(input, everything()).report.dump() == a.report.dump());
  }
  AnalysisOptions timed;
  timed.timing = true;
  const Analysis t = analyze(corpus_points("torus-p1-f5"), timed);
  CHECK(t.report.contains("timing"));
  CHECK(validate_schema(schema, t.report).empty());
  CHECK_FALSE(analyze(corpus_points("torus-p1-f5"), {}).report.contains("timing"));
}

TEST_CASE("schema validator rejects malformed reports") {
  const Json schema = load_schema();
  const Json good = analyze(corpus_points("torus-p1-f5"), everything()).report;
  Json missing = good;
  missing.erase("results");
  CHECK_FALSE(validate_schema(schema, missing).empty());
  Json extra = good;
  extra["surprise"] = 1;
  CHECK_FALSE(validate_schema(schema, extra).empty());
  Json wrong_type = good;
  wrong_type["results"]["hilbert"]["r0"] = "three";
  CHECK_FALSE(validate_schema(schema, wrong_type).empty());
  Json bad_enum = good;
  bad_enum["results"]["weight_matrix"]["cells"][0][0]["kind"] = "approximate";
  CHECK_FALSE(validate_schema(schema, bad_enum).empty());
  Json bad_witness = good;
  bad_witness["results"]["duality"]["witness"] = {{"d", 1}};
  CHECK_FALSE(validate_schema(schema, bad_witness).empty());
}

TEST_CASE("budget errors keep partial results") {
  AnalysisOptions o;
  o.budgets = Budgets::uniform(5);
  o.weight_matrix = true;
  o.ghw = {{2, 3}};
  const Analysis a = analyze(corpus_points("ten-points-p2-glex-f3"), o);
  CHECK(a.verdict == Verdict::BudgetExceeded);
  CHECK(exit_code(a.verdict, false) == 3);
  const Json& r = a.report["results"];
  CHECK(r["vanishing_ideal"]["generators"].size() == 3);
  CHECK(r["codes"][0]["min_distance"] == 10);
  CHECK(r["ghw"][0]["status"] == "budget");
  CHECK(r["weight_matrix"]["fully_resolved"] == false);
  bool any_budget = false;
  for (const auto& e : a.report["errors"]) any_budget = any_budget || e["kind"] == "BudgetExceeded";
  CHECK(any_budget);
}

TEST_CASE("criteria and exit codes") {
  AnalysisOptions o;
  o.duality = true;
  const Analysis a = analyze(corpus_points("ten-points-p2-glex-f3"), o);
  CHECK(a.verdict == Verdict::CriterionFalse);
  CHECK(a.report["criteria"]["duality"] == false);
  CHECK(a.report["results"]["duality"]["witness"]["reason"] == "v(I) = 3 < r0 = 4");
  CHECK(exit_code(a.verdict, false) == 0);
  CHECK(exit_code(a.verdict, true) == 1);
  CHECK(exit_code(Verdict::Inconsistent, false) == 4);
  CHECK(exit_code(Verdict::InputError, false) == 2);
}

TEST_CASE("affine input is analysed through its closure") {
  auto f3 = Field::create(3);
  PointsFile affine{f3, 2, std::nullopt, affine_space(*f3, 2)};
  AnalysisOptions o;
  o.affine = true;
  o.duality = true;
  const Analysis a = analyze(affine, o);
  const Analysis p = analyze(corpus_points("affine-plane-f3"), {.duality = true});
  CHECK(a.report["input"]["affine"] == true);
  CHECK(a.report["results"]["vanishing_ideal"] == p.report["results"]["vanishing_ideal"]);
  CHECK(a.report["results"]["duality"] == p.report["results"]["duality"]);
  affine.order = TermOrder::grevlex(3);
  CHECK(testing::error_kind([&] { analyze(affine, o); }) == ErrorKind::InvalidParams);
}

TEST_CASE("a given linear form must be regular") {
  AnalysisOptions o;
  o.gorenstein = true;
  o.h = "t1";
  const Analysis a = analyze(corpus_points("gorenstein-five-points-f3"), o);
  CHECK(a.verdict == Verdict::InputError);
  CHECK(a.report["errors"][0]["kind"] == "NotRegular");
  o.h = "t1+t4";
  const Analysis b = analyze(corpus_points("gorenstein-five-points-f3"), o);
  CHECK(b.verdict == Verdict::Ok);
  CHECK(b.report["results"]["gorenstein"]["socle_monomial"] == "t3*t4");
  CHECK(b.report["results"]["gorenstein"]["identities"]["essential_form_checked"] == false);
}

TEST_CASE("table rendering") {
  AnalysisOptions o;
  o.selfdual = true;
  const std::string line = format_table(analyze(corpus_points("projective-line-f9"), o).report);
  CHECK(line.find("self-dual: d=4 only\n") != std::string::npos);
  CHECK(line.find("self-orthogonal: d=4\n") != std::string::npos);

  AnalysisOptions w;
  w.weight_matrix = true;
  const std::string text = format_table(analyze(corpus_points("seven-points-p2-f3"), w).report);
  CHECK(text.find("  d=1  3 6 7 ∞ ∞ ∞ ∞\n") != std::string::npos);
  CHECK(text.find("  d=2  1 2 3 5 6 7 ∞\n") != std::string::npos);
  CHECK(text.find("  d=3  1 2 3 4 5 6 7\n") != std::string::npos);
}
