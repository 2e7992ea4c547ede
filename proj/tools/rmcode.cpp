// Command-line front end: analyze points files, generate standard point sets,
// and run the golden corpus.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rmcode/error.hpp"
#include "rmcode/golden.hpp"
#include "rmcode/report.hpp"

namespace {

using namespace rmcode;

constexpr int kInputError = 2;
constexpr int kInternal = 4;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

std::pair<int, int> parse_cell(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) fail(ErrorKind::InvalidParams, "--ghw expects d,r; got " + text);
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidParams, "--ghw expects integers d,r; got " + text);
  }
}

// q = p^k with p prime.
FieldPtr field_of_order(long long q, const std::string& modulus) {
  for (long long p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    int k = 0;
    long long r = q;
    while (r % p == 0) r /= p, ++k;
    if (r != 1) break;
    std::optional<std::vector<int>> mod;
    if (!modulus.empty()) {
      std::vector<int> coeffs;
      std::stringstream ss(modulus);
      for (std::string item; std::getline(ss, item, ',');) coeffs.push_back(std::stoi(item));
      mod = std::move(coeffs);
    }
    return Field::create(static_cast<int>(p), k, mod);
  }
  fail(ErrorKind::InvalidParams, "q = " + std::to_string(q) + " is not a prime power");
}

std::vector<std::vector<int>> parse_exponents(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  for (std::string row; std::getline(ss, row, ';');) {
    std::vector<int> v;
    std::stringstream rs(row);
    for (std::string item; std::getline(rs, item, ',');) {
      try {
        v.push_back(std::stoi(item));
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidParams, "bad exponent '" + item + "'");
      }
    }
    rows.push_back(std::move(v));
  }
  if (rows.empty()) fail(ErrorKind::InvalidParams, "--exponents needs at least one row");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) fail(ErrorKind::InvalidParams, "exponent rows differ in length");
  return rows;
}

int run_analyze(const std::string& path, AnalysisOptions opts, const std::vector<std::string>& cells, bool json,
                bool strict) {
  for (const auto& c : cells) opts.ghw.push_back(parse_cell(c));
  const PointsFile input = parse_points_file(read_input(path));
  const Analysis a = analyze(input, opts);
  std::cout << (json ? a.report.dump(2) + "\n" : format_table(a.report));
  return exit_code(a.verdict, strict);
}

int run_generate(const std::string& kind, long long q, const std::string& modulus, int s, int n,
                 const std::string& exponents, const std::string& out) {
  const FieldPtr field = field_of_order(q, modulus);
  auto need = [](bool ok, const char* what) {
    if (!ok) fail(ErrorKind::InvalidParams, what);
  };
  std::optional<ProjectivePointSet> x;
  if (kind == "projective") {
    need(s >= 2, "projective needs --s >= 2");
    x = full_projective(field, s);
  } else if (kind == "torus") {
    need(s >= 2, "torus needs --s >= 2");
    x = projective_torus(field, s);
  } else if (kind == "parameterized") {
    need(!exponents.empty(), "parameterized needs --exponents");
    x = parameterized_points(field, parse_exponents(exponents));
  } else {
    need(n >= 1, "affine-grid needs --n >= 1");
    x = projective_closure(field, n, affine_space(*field, n));
  }
  const std::string text = format_points_file(*x);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) fail(ErrorKind::InvalidParams, "cannot write " + out);
    f << text;
  }
  return 0;
}

int run_golden(const std::string& dir, const std::string& name) {
  const auto cases = load_golden(dir, name.empty() ? std::nullopt : std::optional<std::string>(name));
  int failed = 0;
  double total = 0;
  for (const auto& c : cases) {
    const GoldenResult r = run_golden_case(c);
    total += r.seconds;
    std::printf("%s %-34s %2d checks  %.3f s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.checks, r.seconds);
    for (const auto& d : r.diffs) std::printf("    %s\n", d.c_str());
    failed += r.passed ? 0 : 1;
  }
  std::printf("%zu/%zu passed in %.3f s\n", cases.size() - failed, cases.size(), total);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Muller-type codes on projective point sets over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  AnalysisOptions opts;
  std::string path;
  std::vector<std::string> cells;
  std::string order, h;
  std::uint64_t budget = 0;
  bool json = false, table = false, strict = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyse a points file");
  analyze_cmd->add_option("file", path, "Points file ('-' for stdin)")->required();
  analyze_cmd->add_option("--order", order, "Term order, e.g. 'grevlex' or 'glex perm=3,2,1'");
  analyze_cmd->add_option("--ghw", cells, "Generalized Hamming weight cell d,r (repeatable)");
  analyze_cmd->add_flag("--weight-matrix", opts.weight_matrix, "Full weight matrix for 1 <= d <= r0");
  analyze_cmd->add_flag("--footprint", opts.footprint, "Footprint matrix");
  analyze_cmd->add_flag("--duality", opts.duality, "Global duality certificate");
  analyze_cmd->add_flag("--selfdual", opts.selfdual, "Self-orthogonal and self-dual degrees");
  analyze_cmd->add_flag("--gorenstein", opts.gorenstein, "Artinian reduction, socle and Gorenstein test");
  analyze_cmd->add_option("--linear-form", h, "Linear form h for the Artinian reduction (default: chosen automatically)");
  analyze_cmd->add_flag("--affine", opts.affine, "Rows are affine points; analyse the projective closure");
  analyze_cmd->add_option("--budget", budget, "Enumeration budget for every search")->check(CLI::PositiveNumber);
  auto* json_flag = analyze_cmd->add_flag("--json", json, "JSON report");
  analyze_cmd->add_flag("--table", table, "Plain-text report (default)")->excludes(json_flag);
  analyze_cmd->add_flag("--strict", strict, "Exit 1 when a requested criterion is false");
  analyze_cmd->add_flag("--timing", opts.timing, "Record per-analysis wall time in the report");

  std::string kind, modulus, exponents, out;
  long long q = 0;
  int s = 0, n = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Write a standard point set as a points file");
  gen_cmd->add_option("kind", kind, "projective | torus | parameterized | affine-grid")
      ->required()
      ->check(CLI::IsMember({"projective", "torus", "parameterized", "affine-grid"}));
  gen_cmd->add_option("--q", q, "Field size")->required();
  gen_cmd->add_option("--modulus", modulus, "Ascending modulus coefficients c0,...,ck");
  gen_cmd->add_option("--s", s, "Number of homogeneous coordinates");
  gen_cmd->add_option("--n", n, "Affine dimension (affine-grid)");
  gen_cmd->add_option("--exponents", exponents, "Rows v_1;...;v_s of comma-separated exponents (parameterized)");
  gen_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  std::string golden_dir = default_golden_dir().string(), name;
  auto* golden_cmd = app.add_subcommand("golden", "Run the golden corpus");
  golden_cmd->add_option("--dir", golden_dir, "Corpus directory");
  golden_cmd->add_option("--name", name, "Run only this example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (!order.empty()) opts.order = order;
      if (!h.empty()) opts.h = h;
      opts.budgets = budget > 0 ? Budgets::uniform(budget) : Budgets::from_env();
      return run_analyze(path, opts, cells, json, strict);
    }
    if (gen_cmd->parsed()) return run_generate(kind, q, modulus, s, n, exponents, out);
    return run_golden(golden_dir, name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::BudgetExceeded:
        return 3;
      case ErrorKind::InternalInconsistency:
      case ErrorKind::IdentityViolated:
      case ErrorKind::CertificationFailed:
        return kInternal;
      default:
        return kInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
