// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "rmcode/codes.hpp"
#include "rmcode/golden.hpp"
#include "rmcode/groebner.hpp"
#include "rmcode/indicators.hpp"
#include "rmcode/linalg.hpp"
#include "rmcode/report.hpp"
#include "rmcode/variety.hpp"

using namespace rmcode;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string corpus_text(const std::string& name) {
  std::ifstream in(default_golden_dir() / name / "points.txt");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PointsFile corpus_points(const std::string& name) { return parse_points_file(corpus_text(name)); }

GoldenCase corpus_case(const std::string& name) { return load_golden(default_golden_dir(), name).front(); }

void expect_golden(Outcome& out, const std::string& name) {
  const GoldenResult r = run_golden_case(corpus_case(name));
  out.expect(r.passed, name + " golden comparison");
  for (const auto& d : r.diffs) out.failures.push_back(name + ": " + d);
}

std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// 1. Golden corpus.
Outcome golden_corpus() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto cases = load_golden(default_golden_dir());
  out.expect(cases.size() >= 10, "corpus has fewer than 10 examples");
  for (const auto& c : cases) {
    const GoldenResult r = run_golden_case(c);
    out.expect(r.passed, c.name);
    for (const auto& d : r.diffs) out.failures.push_back(c.name + ": " + d);
  }
  const double t = seconds_since(t0);
  out.expect(t < 5.0, "runtime " + std::to_string(t) + " s >= 5 s");
  return out;
}

// 2. Weight matrices, with every cell inside the enumeration budget recomputed directly.
Outcome weight_matrices() {
  Outcome out;
  const auto t0 = Clock::now();
  for (const std::string name : {"ten-points-p2-glex-f3", "seven-points-p2-f3"}) {
    expect_golden(out, name);
    const PointsFile pf = corpus_points(name);
    const ProjectivePointSet x(pf.field, pf.nvars, pf.coords);
    const TermOrder order = pf.order.value_or(TermOrder::grevlex(pf.nvars));
    const GroebnerBasis g = vanishing_ideal(x, order);
    const HilbertData hd = hilbert_data(g, static_cast<long long>(x.size()));
    const IndicatorSet is = standard_indicators(x, g);
    const WeightMatrix wm = weight_matrix(x, g, hd, is);
    out.expect(wm.fully_resolved(), name + " has unresolved cells");
    const Budgets budgets;
    for (int d = 1; d <= hd.r0; ++d) {
      const LinearCode c = code_of_degree(x, g, d);
      const int k = static_cast<int>(c.dimension());
      for (int r = 1; r <= static_cast<int>(x.size()); ++r) {
        const WeightCell& cell = wm.at(d, r);
        const std::string where = name + " cell (" + std::to_string(d) + "," + std::to_string(r) + ")";
        if (r > k) {
          out.expect(cell.kind == WeightCell::Kind::Infinity, where + " should be infinite");
          continue;
        }
        if (gaussian_binomial(k, r, x.field()->q()) > budgets.subspaces) continue;
        out.expect(cell.exact() && cell.lo == ghw(c, r, budgets.subspaces), where + " differs from enumeration");
      }
    }
    if (name == "ten-points-p2-glex-f3") {
      bool equal = true;
      for (int d = 1; d <= hd.r0; ++d)
        for (int r = 1; r <= hd.at(d); ++r) equal = equal && wm.fp[d - 1][r - 1] == wm.at(d, r).lo;
      out.expect(equal, name + " footprint matrix differs from the weight matrix");
    }
  }
  const double t = seconds_since(t0);
  out.expect(t < 60.0, "runtime " + std::to_string(t) + " s >= 60 s");
  return out;
}

// 3. Duality certificates.
Outcome duality_certificates() {
  Outcome out;
  const auto t0 = Clock::now();
  AnalysisOptions o;
  o.duality = true;
  for (const std::string name :
       {"ci-four-points-f3", "affine-plane-f3", "gorenstein-five-points-nonci-f3", "torus-p1-f5"}) {
    expect_golden(out, name);
    const Json r = analyze(corpus_points(name), o).report["results"];
    const Json& cert = r["duality"];
    out.expect(cert["holds"] == true, name + " duality does not hold");
    out.expect(!cert["beta"].is_null(), name + " has no beta");
    out.expect(ints(cert["verified_degrees"]) == range(0, r["hilbert"]["r0"].get<int>()),
               name + " not verified in every degree");
  }
  const Json r = analyze(corpus_points("ten-points-p2-glex-f3"), o).report["results"]["duality"];
  out.expect(r["holds"] == false, "ten-point set: duality holds");
  out.expect(r["witness"]["reason"] == "v(I) = 3 < r0 = 4", "ten-point set: wrong witness");
  const double t = seconds_since(t0);
  out.expect(t < 5.0, "runtime " + std::to_string(t) + " s >= 5 s");
  return out;
}

// 4. Self-dual classification.
Outcome selfdual_classification() {
  Outcome out;
  const auto t0 = Clock::now();
  AnalysisOptions o;
  o.selfdual = true;
  auto row = [&](const std::string& name) { return analyze(corpus_points(name), o).report["results"]["selfdual"]; };
  const Json line = row("projective-line-f9");
  out.expect(ints(line["self_dual"]) == std::vector<int>{4}, "F_9 line: self-dual degrees");
  out.expect(ints(line["self_orthogonal"]) == std::vector<int>{4}, "F_9 line: self-orthogonal degrees");
  const Json plane = row("projective-plane-f3");
  out.expect(ints(plane["self_orthogonal"]) == std::vector<int>{1, 2}, "plane: self-orthogonal degrees");
  out.expect(plane["self_dual"].empty(), "plane: self-dual degrees");
  const Json six = row("selfdual-six-points-f4");
  const auto sd = ints(six["self_dual"]);
  out.expect(std::find(sd.begin(), sd.end(), 1) != sd.end(), "six points: degree 1 not self-dual");
  const double t = seconds_since(t0);
  out.expect(t < 10.0, "runtime " + std::to_string(t) + " s >= 10 s");
  return out;
}

// 5. Gorenstein pipeline and the duality/Gorenstein crosscheck on every example.
Outcome gorenstein_pipeline() {
  Outcome out;
  expect_golden(out, "gorenstein-five-points-f3");
  AnalysisOptions o;
  o.gorenstein = true;
  o.h = "t1+t4";
  const Json five = analyze(corpus_points("gorenstein-five-points-f3"), o).report["results"]["gorenstein"];
  out.expect(five["gorenstein"] == true, "five points: not Gorenstein");
  out.expect(five["complete_intersection"] == false, "five points: reported CI");
  out.expect(five["socle_monomial"] == "t3*t4", "five points: socle");
  o.h.reset();
  const Json plane = analyze(corpus_points("projective-plane-f3"), o).report["results"]["gorenstein"];
  out.expect(plane["type"] == 2 && plane["s_number"] == 3 && plane["level"] == false, "plane: socle data");

  AnalysisOptions both;
  both.duality = both.gorenstein = true;
  for (const auto& c : load_golden(default_golden_dir())) {
    const Analysis a = analyze(parse_points_file(c.points_text), both);
    const Json& r = a.report["results"];
    out.expect(exit_code(a.verdict, false) != 4, c.name + ": exit code 4");
    out.expect(r.contains("gorenstein") && r["gorenstein"]["crosscheck"] == true, c.name + ": crosscheck missing");
    if (r.contains("gorenstein") && r.contains("duality"))
      out.expect(r["gorenstein"]["gorenstein"] == r["duality"]["holds"], c.name + ": duality and Gorenstein differ");
  }
  return out;
}

// 6a. Field axioms, with products also checked by schoolbook polynomial arithmetic.
void field_axioms(Outcome& out) {
  for (int q = 2; q <= 81; ++q) {
    int p = 0, k = 0;
    for (int c = 2; c <= q && p == 0; ++c)
      if (q % c == 0) p = c;
    int r = q;
    while (r % p == 0) r /= p, ++k;
    if (r != 1) continue;
    const FieldPtr fp = Field::create(p, k);
    const Field& f = *fp;
    const std::string tag = "F_" + std::to_string(q);
    const auto& mod = f.modulus();
    auto schoolbook = [&](Elem x, Elem y) {
      const auto a = f.coeffs(x), b = f.coeffs(y);
      std::vector<int> c(a.size() + b.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
      for (int i = static_cast<int>(c.size()) - 1; i >= k; --i) {
        const int lead = c[i];
        if (lead == 0) continue;
        for (int j = 0; j <= k; ++j) c[i - k + j] = ((c[i - k + j] - lead * mod[j]) % p + p) % p;
      }
      c.resize(k);
      return f.from_coeffs(c);
    };
    bool ok = true;
    for (Elem x = 0; x < f.q(); ++x) {
      ok = ok && f.add(x, 0) == x && f.mul(x, 1) == x && f.add(x, f.neg(x)) == 0;
      if (x != 0) ok = ok && f.mul(x, f.inv(x)) == 1;
      for (Elem y = 0; y < f.q(); ++y) {
        ok = ok && f.add(x, y) == f.add(y, x) && f.mul(x, y) == f.mul(y, x);
        if (k > 1) ok = ok && f.mul(x, y) == schoolbook(x, y);
        for (Elem z = 0; z < f.q() && ok; ++z) {
          ok = f.add(f.add(x, y), z) == f.add(x, f.add(y, z)) && f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)) &&
               f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
        }
      }
      if (!ok) break;
    }
    ok = ok && f.order(f.generator()) == f.q() - 1;
    out.expect(ok, tag + " field axioms");
  }
}

// Direct reading of the order definitions; perm[0] is the largest variable.
int reference_compare(const TermOrder& o, const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree()) return u.degree() < v.degree() ? -1 : 1;
  const auto& perm = o.perm();
  if (o.kind() == OrderKind::GLex) {
    for (int i : perm)
      if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  } else {
    for (auto it = perm.rbegin(); it != perm.rend(); ++it)
      if (u[*it] != v[*it]) return u[*it] > v[*it] ? -1 : 1;
  }
  return 0;
}

int sign(std::strong_ordering c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

// 6b. Term order axioms on random monomial triples.
void order_axioms(Outcome& out) {
  std::mt19937 rng(20240601);
  const int n = 4;
  std::vector<int> shuffled = {2, 0, 3, 1};
  const std::vector<TermOrder> orders = {TermOrder::grevlex(n), TermOrder::glex(n),
                                         TermOrder(OrderKind::GRevLex, shuffled),
                                         TermOrder(OrderKind::GLex, shuffled)};
  std::uniform_int_distribution<int> e(0, 4);
  auto random_monomial = [&] {
    std::vector<int> v(n);
    for (auto& x : v) x = e(rng);
    return Monomial(v);
  };
  for (const auto& o : orders) {
    bool ok = true;
    const Monomial one = Monomial::one(n);
    for (int trial = 0; trial < 1000; ++trial) {
      const Monomial u = random_monomial(), v = random_monomial(), w = random_monomial();
      const int uv = sign(o.compare(u, v)), vw = sign(o.compare(v, w)), uw = sign(o.compare(u, w));
      ok = ok && uv == reference_compare(o, u, v) && uv == -sign(o.compare(v, u)) && ((uv == 0) == (u == v));
      if (uv <= 0 && vw <= 0) ok = ok && uw <= 0;
      if (uv >= 0 && vw >= 0) ok = ok && uw >= 0;
      ok = ok && sign(o.compare(u * w, v * w)) == uv;
      ok = ok && (u == one || o.less(one, u));
    }
    out.expect(ok, o.describe() + " order axioms");
  }
}

std::vector<long long> distances(const ProjectivePointSet& x, const GroebnerBasis& g, int r0) {
  std::vector<long long> v;
  for (int d = 1; d <= r0; ++d) v.push_back(min_distance(code_of_degree(x, g, d)));
  return v;
}

// 6c-e. Rescaling invariance, Macaulay identity and v = reg delta on random point sets.
void random_point_sets(Outcome& out) {
  std::mt19937 rng(777);
  const std::vector<std::pair<int, int>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto [p, k] = fields[trial % fields.size()];
    const FieldPtr field = Field::create(p, k);
    const int s = 2 + static_cast<int>(rng() % 2);
    std::vector<Point> all = full_projective(field, s).points();
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t m = 2 + rng() % (std::min<std::size_t>(8, all.size()) - 1);
    all.resize(m);
    const ProjectivePointSet x(field, s, all);
    std::vector<Elem> lambdas(m);
    for (auto& l : lambdas) l = 1 + rng() % (field->q() - 1);
    const ProjectivePointSet y = x.rescaled(lambdas);
    const std::string tag = "set " + std::to_string(trial);

    const TermOrder order = TermOrder::grevlex(s);
    const GroebnerBasis gx = vanishing_ideal(x, order), gy = vanishing_ideal(y, order);
    out.expect(gx.gens == gy.gens, tag + ": I(X) depends on representatives");
    const HilbertData hx = hilbert_data(gx, m), hy = hilbert_data(gy, m);
    out.expect(hx.H == hy.H && hx.h == hy.h && hx.r0 == hy.r0 && hx.a_invariant == hy.a_invariant,
               tag + ": Hilbert data depends on representatives");
    const auto dx = distances(x, gx, hx.r0);
    out.expect(dx == distances(y, gy, hy.r0), tag + ": delta depends on representatives");
    for (int d = 1; d <= hx.r0; ++d)
      for (int r = 1; r <= hx.at(d); ++r)
        out.expect(footprint(gx, d, r, m) == footprint(gy, d, r, m), tag + ": fp depends on representatives");

    for (int d = 0; d <= hx.r0 + 1; ++d) {
      const auto monos = monomials_of_degree(s, d);
      const long long by_rank = static_cast<long long>(rank(*field, evaluation_matrix(x, monos)));
      const long long by_footprint = static_cast<long long>(standard_monomials(gx, d).size());
      out.expect(hx.at(d) == by_rank && by_rank == by_footprint, tag + ": Macaulay identity");
    }

    int reg = 1;
    while (reg <= hx.r0 && dx[reg - 1] != 1) ++reg;
    out.expect(v_numbers(standard_indicators(x, gx)).v == reg, tag + ": v(I) != reg delta");
  }
}

// 6f. Dual involution on random codes, with orthogonality checked directly.
void dual_involution(Outcome& out) {
  std::mt19937 rng(4242);
  const std::vector<std::pair<int, int>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  for (int trial = 0; trial < 200; ++trial) {
    const auto [p, k] = fields[trial % fields.size()];
    const FieldPtr field = Field::create(p, k);
    const std::size_t n = 1 + rng() % 12;
    const std::size_t rows = 1 + rng() % n;
    Matrix gen(rows, n);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < n; ++j) gen.at(i, j) = rng() % field->q();
    const LinearCode c(field, n, gen);
    const LinearCode dual = dual_code(c);
    bool orthogonal = true;
    for (std::size_t i = 0; i < c.dimension(); ++i)
      for (std::size_t j = 0; j < dual.dimension(); ++j)
        orthogonal = orthogonal && dot(*field, c.basis().row(i), dual.basis().row(j)) == 0;
    const std::string tag = "code " + std::to_string(trial);
    out.expect(orthogonal && c.dimension() + dual.dimension() == n, tag + ": dual is not the orthogonal complement");
    out.expect(dual_code(dual) == c, tag + ": dual of dual differs");
  }
}

Outcome property_suites() {
  Outcome out;
  field_axioms(out);
  order_axioms(out);
  random_point_sets(out);
  dual_involution(out);
  return out;
}

// 7. The first degree with delta(d, r) = r is the r-th sorted indicator degree.
Outcome regularity_indices() {
  Outcome out;
  const PointsFile pf = corpus_points("seven-points-p2-f3");
  const ProjectivePointSet x(pf.field, pf.nvars, pf.coords);
  const GroebnerBasis g = vanishing_ideal(x, pf.order.value_or(TermOrder::grevlex(pf.nvars)));
  const HilbertData hd = hilbert_data(g, static_cast<long long>(x.size()));
  const VNumbers vn = v_numbers(standard_indicators(x, g));
  out.expect(vn.v_r == std::vector<int>({2, 2, 2, 3, 3, 3, 3}), "sorted indicator degrees");
  std::vector<LinearCode> codes;
  for (int d = 1; d <= hd.r0; ++d) codes.push_back(code_of_degree(x, g, d));
  for (int r = 1; r <= static_cast<int>(x.size()); ++r) {
    int first = -1;
    for (int d = 1; d <= hd.r0 && first < 0; ++d)
      if (r <= static_cast<int>(codes[d - 1].dimension()) && ghw(codes[d - 1], r) == r) first = d;
    out.expect(first == vn.v_r[r - 1], "r = " + std::to_string(r) + ": first degree " + std::to_string(first));
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden corpus", golden_corpus},
      {"weight matrices", weight_matrices},
      {"duality certificates", duality_certificates},
      {"self-dual classification", selfdual_classification},
      {"Gorenstein pipeline", gorenstein_pipeline},
      {"property suites", property_suites},
      {"regularity indices", regularity_indices},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = out.failures.empty();
    failed += pass ? 0 : 1;
    std::printf("%s %zu %s (%.2f s)\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds_since(t0));
    for (std::size_t j = 0; j < std::min<std::size_t>(out.failures.size(), 20); ++j)
      std::printf("    %s\n", out.failures[j].c_str());
  }
  return failed == 0 ? 0 : 1;
}
