#include "rmcode/golden.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "rmcode/duality.hpp"
#include "rmcode/error.hpp"

#ifndef RMCODE_GOLDEN_DIR
#define RMCODE_GOLDEN_DIR "golden"
#endif

namespace rmcode {

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Monomial parse_monomial(const FieldPtr& field, int s, const std::string& text) {
  const Poly p = parse_poly(field, s, text);
  if (p.size() != 1 || p.terms().begin()->second != 1) fail(ErrorKind::ParseError, "not a monomial: " + text);
  return p.terms().begin()->first;
}

std::set<std::string> monomial_set(const FieldPtr& field, int s, const Json& arr) {
  std::set<std::string> out;
  for (const auto& t : arr) out.insert(parse_monomial(field, s, t).to_string());
  return out;
}

std::set<std::string> as_set(const std::vector<Monomial>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(m.to_string());
  return out;
}

Json to_json(const std::set<std::string>& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

std::vector<Elem> parse_elems(const Field& f, const Json& arr) {
  std::vector<Elem> out;
  for (const auto& t : arr) out.push_back(f.parse(t.get<std::string>()));
  return out;
}

Json format_elems(const Field& f, std::span<const Elem> v) {
  Json out = Json::array();
  for (Elem x : v) out.push_back(f.format_signed(x));
  return out;
}

bool proportional_vectors(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) return false;
  std::optional<Elem> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] == 0) continue;
    const Elem r = f.div(b[i], a[i]);
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

// Evaluates a golden case lazily: each expected key pulls only what it needs.
class Checker {
 public:
  explicit Checker(const GoldenCase& c) : expected_(c.expected) {
    input_ = parse_points_file(c.points_text);
    field_ = input_.field;
    s_ = input_.nvars;
    order_ = input_.order.value_or(TermOrder::grevlex(s_));
    x_.emplace(field_, s_, input_.coords);
    g_ = vanishing_ideal(*x_, order_);
    hd_ = hilbert_data(g_, static_cast<long long>(x_->size()));
    is_ = standard_indicators(*x_, g_);
  }

  void run(GoldenResult& out) {
    out_ = &out;
    for (const auto& [key, value] : expected_.items()) {
      if (key == "description") continue;
      ++out.checks;
      try {
        check(key, value);
      } catch (const Error& e) {
        diff(key, "error: " + std::string(e.what()));
      }
    }
    // The duality criterion and the Gorenstein classification must agree on
    // every corpus entry, whether or not the entry records either.
    ++out.checks;
    try {
      gorenstein_crosscheck(cert(), classification());
    } catch (const Error& e) {
      diff("crosscheck", e.what());
    }
  }

 private:
  void diff(const std::string& key, const std::string& msg) { out_->diffs.push_back(key + ": " + msg); }

  void compare(const std::string& key, const Json& want, const Json& got) {
    if (want != got) diff(key, "expected " + want.dump() + ", got " + got.dump());
  }

  std::optional<std::size_t> match_indicator(const Poly& p) const {
    for (std::size_t j = 0; j < is_.fs.size(); ++j)
      if (proportionality(is_.fs[j], p)) return j;
    return std::nullopt;
  }

  const DualityCertificate& cert() {
    if (!cert_) cert_ = global_duality(*x_, g_, hd_, is_);
    return *cert_;
  }

  const ArtinianClassification& classification(const std::optional<Poly>& h = std::nullopt) {
    auto& slot = h ? given_cls_ : cls_;
    if (!slot) slot = classify_artinian(*x_, g_, hd_, h);
    return *slot;
  }

  std::vector<Poly> parse_polys(const Json& arr) const {
    std::vector<Poly> out;
    for (const auto& t : arr) out.push_back(parse_poly(field_, s_, t.get<std::string>()));
    return out;
  }

  Json actual_polys(const std::vector<Poly>& ps, const TermOrder& order) const {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.to_string(order));
    return out;
  }

  void check(const std::string& key, const Json& want) {
    const Field& f = *field_;
    if (key == "ideal") {
      const auto gens = parse_polys(want);
      const GroebnerBasis printed = buchberger(gens, order_);
      if (printed.gens != g_.gens)
        diff(key, "reduced basis of the expected generators " + actual_polys(printed.gens, order_).dump() +
                      " differs from " + actual_polys(g_.gens, order_).dump());
    } else if (key == "hilbert") {
      Json got = Json::array();
      for (int d = 0; d < static_cast<int>(want.size()); ++d) got.push_back(hd_.at(d));
      compare(key, want, got);
    } else if (key == "r0") {
      compare(key, want, hd_.r0);
    } else if (key == "h_vector") {
      compare(key, want, hd_.h);
    } else if (key == "v") {
      compare(key, want, v_numbers(is_).v);
    } else if (key == "v_local") {
      compare(key, want, is_.degrees);
    } else if (key == "v_r") {
      compare(key, want, v_numbers(is_).v_r);
    } else if (key == "standard_monomials") {
      for (const auto& [d, monos] : want.items())
        compare(key + "[" + d + "]", to_json(monomial_set(field_, s_, monos)),
                to_json(as_set(standard_monomials(g_, std::stoi(d)))));
    } else if (key == "indicators") {
      // As a set up to scalar: each listed function is a multiple of exactly one computed f_j.
      const auto printed = parse_polys(want);
      if (printed.size() != is_.fs.size()) {
        diff(key, "expected " + std::to_string(printed.size()) + " functions, got " + std::to_string(is_.fs.size()));
        return;
      }
      std::vector<bool> used(printed.size(), false);
      for (std::size_t i = 0; i < printed.size(); ++i) {
        const auto j = match_indicator(printed[i]);
        if (!j || used[*j]) {
          diff(key + "[" + std::to_string(i) + "]",
               "no unmatched computed indicator function is a multiple of " + printed[i].to_string(order_));
          continue;
        }
        used[*j] = true;
      }
    } else if (key == "indicator_values") {
      // Each listed function evaluated at the listed coordinates of the point it separates.
      const auto printed = parse_polys(expected_.at("indicators"));
      Json got = Json::array();
      for (const auto& p : printed) {
        const auto j = match_indicator(p);
        got.push_back(j ? Json(f.format_signed(p.eval(input_.coords[*j]))) : Json(nullptr));
      }
      compare(key, format_elems(f, parse_elems(f, want)), got);
    } else if (key == "essential") {
      compare(key, to_json(monomial_set(field_, s_, want)), to_json(as_set(is_.essential)));
    } else if (key == "min_generators") {
      compare(key, want, minimal_generator_count(g_, hd_.r0 + 1));
    } else if (key == "complete_intersection") {
      compare(key, want, minimal_generator_count(g_, hd_.r0 + 1) == s_ - 1);
    } else if (key == "min_distance") {
      for (const auto& [d, v] : want.items())
        compare(key + "[" + d + "]", v, min_distance(code_of_degree(*x_, g_, std::stoi(d))));
    } else if (key == "reg_delta") {
      int d = 0;
      while (min_distance(code_of_degree(*x_, g_, d)) != 1) ++d;
      compare(key, want, d);
    } else if (key == "weight_matrix") {
      compare(key, want, weight_json());
    } else if (key == "fp_equals_weight_matrix") {
      compare(key, want, fp_equals_weights());
    } else if (key == "duality") {
      check_duality(want);
    } else if (key == "self_orthogonal" || key == "self_dual") {
      Json got = Json::array();
      for (int d = 0; d <= hd_.r0; ++d)
        if (key == "self_dual" ? self_dual(*x_, g_, d) : self_orthogonal(*x_, g_, d)) got.push_back(d);
      compare(key, want, got);
    } else if (key == "gorenstein") {
      check_gorenstein(want);
    } else if (key == "monomially_self_dual" || key == "column_criterion") {
      const auto rows = gorenstein_selfdual_classify(*x_, g_, hd_, classification());
      if (key == "column_criterion") {
        compare(key, want, rows.front().column_criterion ? Json(*rows.front().column_criterion) : Json(nullptr));
        return;
      }
      Json got = Json::array();
      for (const auto& r : rows)
        if (r.monomially_self_dual) got.push_back(r.d);
      compare(key, want, got);
    } else if (key == "local_duality") {
      for (std::size_t i = 0; i < want.size(); ++i) check_local(key + "[" + std::to_string(i) + "]", want[i]);
    } else {
      diff(key, "unknown expected key");
    }
  }

  Json weight_json() {
    if (!wm_) wm_ = weight_matrix(*x_, g_, hd_, is_);
    Json rows = Json::array();
    for (const auto& row : wm_->cells) {
      Json jr = Json::array();
      for (const auto& c : row) {
        if (c.kind == WeightCell::Kind::Infinity) jr.push_back("inf");
        else if (c.exact()) jr.push_back(c.lo);
        else jr.push_back("[" + std::to_string(c.lo) + "," + std::to_string(c.hi) + "]");
      }
      rows.push_back(std::move(jr));
    }
    return rows;
  }

  bool fp_equals_weights() {
    if (!wm_) wm_ = weight_matrix(*x_, g_, hd_, is_);
    for (std::size_t d = 0; d < wm_->cells.size(); ++d)
      for (std::size_t r = 0; r < wm_->cells[d].size(); ++r) {
        const WeightCell& c = wm_->cells[d][r];
        if (c.kind == WeightCell::Kind::Infinity) continue;
        const auto fp = r < wm_->fp[d].size() ? wm_->fp[d][r] : std::nullopt;
        if (!fp || !c.exact() || *fp != c.lo) return false;
      }
    return true;
  }

  void check_duality(const Json& want) {
    const DualityCertificate& c = cert();
    const Field& f = *field_;
    if (want.contains("holds")) compare("duality.holds", want["holds"], c.holds);
    if (want.contains("beta")) {
      const auto beta = parse_elems(f, want["beta"]);
      if (!proportional_vectors(f, beta, c.beta))
        diff("duality.beta", "expected a multiple of " + format_elems(f, beta).dump() + ", got " +
                                 format_elems(f, c.beta).dump());
      if (!proportional_vectors(f, beta, indicator_beta(*x_, is_)))
        diff("duality.beta", "indicator vector " + format_elems(f, indicator_beta(*x_, is_)).dump() +
                                 " is not a multiple of " + format_elems(f, beta).dump());
    }
    if (want.contains("witness_d"))
      compare("duality.witness_d", want["witness_d"], c.failure_witness ? Json(c.failure_witness->d) : Json(nullptr));
    if (want.contains("witness_reason"))
      compare("duality.witness_reason", want["witness_reason"],
              c.failure_witness ? Json(c.failure_witness->reason) : Json(nullptr));
    if (c.holds) {
      std::vector<int> all(hd_.r0 + 1);
      for (int d = 0; d <= hd_.r0; ++d) all[d] = d;
      compare("duality.verified_degrees", all, c.verified_degrees);
    }
  }

  void check_gorenstein(const Json& want) {
    std::optional<Poly> h;
    if (want.contains("h")) h = parse_poly(field_, s_, want["h"].get<std::string>());
    const ArtinianClassification& cls = classification(h);
    const SocleData& sd = cls.data;
    const TermOrder& jo = cls.j.order;
    if (want.contains("gorenstein")) compare("gorenstein.gorenstein", want["gorenstein"], sd.gorenstein);
    if (want.contains("complete_intersection"))
      compare("gorenstein.complete_intersection", want["complete_intersection"], cls.complete_intersection);
    if (want.contains("type")) compare("gorenstein.type", want["type"], sd.type);
    if (want.contains("level")) compare("gorenstein.level", want["level"], sd.level);
    if (want.contains("s_number")) compare("gorenstein.s_number", want["s_number"], sd.s_number);
    if (want.contains("socle")) {
      // Socle elements up to scalar, for a socle of dimension one per listed element.
      const auto printed = parse_polys(want["socle"]);
      bool ok = printed.size() == sd.socle.size();
      for (std::size_t i = 0; ok && i < printed.size(); ++i) ok = proportionality(sd.socle[i].f, printed[i]).has_value();
      if (!ok) {
        std::vector<Poly> got;
        for (const auto& el : sd.socle) got.push_back(el.f);
        diff("gorenstein.socle", "expected " + want["socle"].dump() + ", got " + actual_polys(got, jo).dump());
      }
    }
    if (want.contains("remainder")) {
      // Remainder of each listed indicator function on division by J, up to a nonzero scalar.
      const Poly target = parse_poly(field_, s_, want["remainder"].get<std::string>());
      const auto printed = parse_polys(expected_.at("indicators"));
      for (std::size_t i = 0; i < printed.size(); ++i) {
        const Poly r = normal_form(printed[i], cls.j);
        if (!proportionality(target, r))
          diff("gorenstein.remainder[" + std::to_string(i) + "]",
               "expected a multiple of " + target.to_string(jo) + ", got " + r.to_string(jo));
      }
    }
  }

  void check_local(const std::string& key, const Json& want) {
    std::vector<Monomial> g1, g2;
    for (const auto& t : want.at("gamma1")) g1.push_back(parse_monomial(field_, s_, t));
    for (const auto& t : want.at("gamma2")) g2.push_back(parse_monomial(field_, s_, t));
    const Monomial te = parse_monomial(field_, s_, want.at("te"));
    const bool projective = want.value("projective", false);
    const LocalDualityVerdict v = local_duality_verify(*x_, g_, hd_, is_, g1, g2, te, projective);
    if (want.contains("gamma"))
      compare(key + ".gamma", format_elems(*field_, parse_elems(*field_, want["gamma"])), format_elems(*field_, v.gamma));
  }

  const Json& expected_;
  GoldenResult* out_ = nullptr;
  PointsFile input_;
  FieldPtr field_;
  int s_ = 0;
  TermOrder order_ = TermOrder::grevlex(1);
  std::optional<ProjectivePointSet> x_;
  GroebnerBasis g_{TermOrder::grevlex(1), {}, false};
  HilbertData hd_;
  IndicatorSet is_{TermOrder::grevlex(1), {}, {}, {}, {}, {}};
  std::optional<DualityCertificate> cert_;
  std::optional<ArtinianClassification> cls_;
  std::optional<ArtinianClassification> given_cls_;
  std::optional<WeightMatrix> wm_;
};

}  // namespace

std::vector<GoldenCase> load_golden(const std::filesystem::path& root, const std::optional<std::string>& filter) {
  if (!std::filesystem::is_directory(root)) fail(ErrorKind::InvalidParams, "no golden corpus at " + root.string());
  std::vector<GoldenCase> out;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    if (filter && name != *filter) continue;
    GoldenCase c{name, read_file(entry.path() / "points.txt"), {}};
    try {
      c.expected = Json::parse(read_file(entry.path() / "expected.json"));
    } catch (const Json::parse_error& e) {
      fail(ErrorKind::ParseError, name + "/expected.json: " + e.what());
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const GoldenCase& a, const GoldenCase& b) { return a.name < b.name; });
  if (filter && out.empty()) fail(ErrorKind::InvalidParams, "no golden example named " + *filter);
  return out;
}

GoldenResult run_golden_case(const GoldenCase& c) {
  GoldenResult out;
  out.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Checker(c).run(out);
  } catch (const Error& e) {
    out.diffs.push_back(std::string("setup: ") + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.passed = out.diffs.empty();
  return out;
}

std::filesystem::path default_golden_dir() { return RMCODE_GOLDEN_DIR; }

}  // namespace rmcode
