#include "rmcode/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "rmcode/duality.hpp"
#include "rmcode/error.hpp"

namespace rmcode {

namespace {

Json elems(const Field& f, std::span<const Elem> v) {
  Json out = Json::array();
  for (Elem x : v) out.push_back(f.format_signed(x));
  return out;
}

Json polys(const std::vector<Poly>& ps, const TermOrder& order) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string(order));
  return out;
}

Json monos(const std::vector<Monomial>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

Verdict verdict_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
      return Verdict::BudgetExceeded;
    case ErrorKind::InternalInconsistency:
    case ErrorKind::IdentityViolated:
    case ErrorKind::CertificationFailed:
      return Verdict::Inconsistent;
    default:
      return Verdict::InputError;
  }
}

// Shared state of one pipeline run.
class Runner {
 public:
  Runner(Json& report, const AnalysisOptions& opts) : report_(report), opts_(opts) {}

  // Runs one analysis; an Error is recorded and the run continues.
  void step(const char* name, const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    try {
      fn();
    } catch (const Error& e) {
      record(name, e.kind(), e.what());
    }
    if (opts_.timing) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      report_["timing"][name] = dt.count();
    }
  }

  void record(const char* name, ErrorKind kind, const std::string& message) {
    report_["errors"].push_back({{"analysis", name}, {"kind", std::string(to_string(kind))}, {"message", message}});
    worst_ = std::max(worst_, verdict_of(kind));
  }

  void criterion(const char* name, bool value) {
    report_["criteria"][name] = value;
    if (!value) worst_ = std::max(worst_, Verdict::CriterionFalse);
  }

  Verdict worst() const { return worst_; }

 private:
  Json& report_;
  const AnalysisOptions& opts_;
  Verdict worst_ = Verdict::Ok;
};

Json cell_json(const WeightCell& c) {
  switch (c.kind) {
    case WeightCell::Kind::Exact:
      return {{"kind", "exact"}, {"value", c.lo}, {"source", c.source}};
    case WeightCell::Kind::Infinity:
      return {{"kind", "infinity"}, {"source", c.source}};
    case WeightCell::Kind::Interval:
      break;
  }
  return {{"kind", "interval"}, {"lo", c.lo}, {"hi", c.hi}, {"source", c.source}};
}

Json field_json(const Field& f) {
  Json j = {{"p", f.p()}, {"k", f.k()}, {"q", f.q()}};
  j["modulus"] = f.k() > 1 ? Json(f.modulus()) : Json(nullptr);
  return j;
}

}  // namespace

Analysis analyze(const PointsFile& input, const AnalysisOptions& opts) {
  const FieldPtr& field = input.field;
  const Field& f = *field;
  if (opts.affine && input.order) fail(ErrorKind::InvalidParams, "an affine points file cannot carry an order line");

  ProjectivePointSet x = opts.affine
                             ? projective_closure(field, input.nvars, input.coords)
                             : ProjectivePointSet(field, input.nvars, input.coords);
  const int s = x.nvars();
  const TermOrder order = opts.order ? TermOrder::parse(*opts.order, s)
                                     : input.order.value_or(TermOrder::grevlex(s));
  std::optional<Poly> h;
  if (opts.h) h = parse_poly(field, s, *opts.h);
  for (const auto& [d, r] : opts.ghw)
    if (d < 0 || r < 1) fail(ErrorKind::InvalidParams, "ghw cell needs d >= 0 and r >= 1");

  Json report;
  report["schema"] = kReportSchema;
  report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  Json in;
  in["field"] = field_json(f);
  in["order"] = order.describe();
  in["nvars"] = s;
  in["affine"] = opts.affine;
  Json pts = Json::array();
  for (const auto& p : x.points()) pts.push_back(elems(f, p));
  in["points"] = std::move(pts);
  report["input"] = std::move(in);
  report["requested"] = {{"ghw", Json(opts.ghw)},        {"weight_matrix", opts.weight_matrix},
                         {"footprint", opts.footprint},    {"duality", opts.duality},
                         {"selfdual", opts.selfdual},      {"gorenstein", opts.gorenstein}};
  report["budgets"] = {{"codewords", opts.budgets.codewords}, {"subspaces", opts.budgets.subspaces}};
  report["results"] = Json::object();
  report["errors"] = Json::array();

  Runner run(report, opts);
  Json& res = report["results"];
  const long long m = static_cast<long long>(x.size());

  // The core pipeline has no budgets; its errors are fatal to the rest.
  std::optional<GroebnerBasis> g;
  std::optional<HilbertData> hd;
  std::optional<IndicatorSet> is;
  run.step("vanishing_ideal", [&] {
    GroebnerBasis gb = vanishing_ideal(x, order);
    HilbertData hdata = hilbert_data(gb, m);
    symmetry_equiv_check(hdata);
    IndicatorSet ind = standard_indicators(x, gb);
    g = std::move(gb);
    hd = std::move(hdata);
    is = std::move(ind);
    const int min_gens = minimal_generator_count(*g, hd->r0 + 1);
    res["vanishing_ideal"] = {{"order", order.describe()},
                              {"generators", polys(g->gens, order)},
                              {"certified", g->certified},
                              {"minimal_generators", min_gens},
                              {"complete_intersection", min_gens == s - 1}};
    res["hilbert"] = {{"H", hd->H},       {"h", hd->h},   {"r0", hd->r0},
                      {"degree", hd->degree}, {"a_invariant", hd->a_invariant}, {"symmetric", hd->symmetric}};
    const VNumbers vn = v_numbers(*is);
    res["indicators"] = {{"functions", polys(is->fs, order)},
                         {"values", elems(f, is->values)},
                         {"essential", monos(is->essential)}};
    res["v_numbers"] = {{"v", vn.v}, {"local", vn.local}, {"v_r", vn.v_r}};
  });
  if (!g) return {std::move(report), run.worst()};

  run.step("codes", [&] {
    Json codes = Json::array();
    std::optional<int> reg_delta;
    bool complete = true;
    for (int d = 0; d <= hd->r0; ++d) {
      const LinearCode c = code_of_degree(x, *g, d);
      Json row = {{"d", d}, {"dimension", c.dimension()}};
      try {
        const long long delta = min_distance(c, opts.budgets.codewords);
        row["min_distance"] = delta;
        if (delta == 1 && !reg_delta && complete) reg_delta = d;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        row["min_distance"] = nullptr;
        complete = false;
        run.record("codes", e.kind(), "d = " + std::to_string(d) + ": " + e.what());
      }
      codes.push_back(std::move(row));
    }
    res["codes"] = std::move(codes);
    res["reg_delta"] = reg_delta ? Json(*reg_delta) : Json(nullptr);
    if (reg_delta && *reg_delta != v_numbers(*is).v)
      fail(ErrorKind::InternalInconsistency, "v(I) differs from the regularity index of the minimum distance");
  });

  if (!opts.ghw.empty()) {
    run.step("ghw", [&] {
      Json cells = Json::array();
      for (const auto& [d, r] : opts.ghw) {
        Json cell = {{"d", d}, {"r", r}};
        const LinearCode c = code_of_degree(x, *g, d);
        if (r > static_cast<int>(c.dimension())) {
          cell["value"] = nullptr;
          cell["status"] = "infinity";
        } else {
          try {
            cell["value"] = ghw(c, r, opts.budgets.subspaces);
            cell["status"] = "exact";
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded) throw;
            cell["value"] = nullptr;
            cell["status"] = "budget";
            run.record("ghw", e.kind(), e.what());
          }
        }
        cells.push_back(std::move(cell));
      }
      res["ghw"] = std::move(cells);
    });
  }

  if (opts.weight_matrix || opts.footprint) {
    run.step("weight_matrix", [&] {
      const WeightMatrix wm = weight_matrix(x, *g, *hd, *is, opts.budgets, true);
      Json out = {{"r0", wm.r0}, {"m", wm.m}};
      if (opts.weight_matrix) {
        Json rows = Json::array();
        for (const auto& row : wm.cells) {
          Json jr = Json::array();
          for (const auto& c : row) jr.push_back(cell_json(c));
          rows.push_back(std::move(jr));
        }
        out["cells"] = std::move(rows);
        out["fully_resolved"] = wm.fully_resolved();
      }
      if (opts.footprint) {
        Json rows = Json::array();
        bool equal = true;
        for (std::size_t d = 0; d < wm.fp.size(); ++d) {
          Json jr = Json::array();
          for (std::size_t r = 0; r < wm.cells[d].size(); ++r) {
            const auto v = r < wm.fp[d].size() ? wm.fp[d][r] : std::nullopt;
            jr.push_back(v ? Json(*v) : Json(nullptr));
            const WeightCell& c = wm.cells[d][r];
            if (c.kind == WeightCell::Kind::Infinity) continue;
            equal = equal && c.exact() && v.value_or(-1) == c.lo;
          }
          rows.push_back(std::move(jr));
        }
        out["fp"] = std::move(rows);
        out["fp_equals_weights"] = equal;
      }
      res["weight_matrix"] = std::move(out);
      if (opts.weight_matrix && !wm.fully_resolved())
        run.record("weight_matrix", ErrorKind::BudgetExceeded, "some cells are only bounded by an interval");
    });
  }

  std::optional<DualityCertificate> cert;
  if (opts.duality || opts.gorenstein) {
    run.step("duality", [&] {
      cert = global_duality(x, *g, *hd, *is);
      Json j = {{"holds", cert->holds}, {"symmetric_sum", cert->symmetric_sum}, {"v_all_r0", cert->v_all_r0}};
      j["beta"] = cert->holds ? elems(f, cert->beta) : Json(nullptr);
      j["indicator_beta"] = elems(f, indicator_beta(x, *is));
      j["verified_degrees"] = cert->verified_degrees;
      j["witness"] = cert->failure_witness
                         ? Json{{"d", cert->failure_witness->d}, {"reason", cert->failure_witness->reason}}
                         : Json(nullptr);
      if (opts.duality) {
        res["duality"] = std::move(j);
        run.criterion("duality", cert->holds);
      }
    });
  }

  std::optional<ArtinianClassification> cls;
  if (opts.gorenstein) {
    run.step("gorenstein", [&] {
      cls = classify_artinian(x, *g, *hd, h);
      const SocleData& sd = cls->data;
      const TermOrder& jo = cls->j.order;
      Json j = {{"form", cls->form.h.to_string(jo)}, {"extension_degree", cls->form.extension_degree}};
      j["reduction"] = polys(cls->j.gens, jo);
      j["hilbert"] = sd.hilbert;
      Json socle = Json::array();
      for (const auto& el : sd.socle) socle.push_back({{"degree", el.degree}, {"element", el.f.to_string(jo)}});
      j["socle"] = std::move(socle);
      j["type"] = sd.type;
      j["level"] = sd.level;
      j["gorenstein"] = sd.gorenstein;
      j["s_number"] = sd.s_number;
      j["socle_degrees"] = sd.socle_degrees;
      j["socle_monomial"] = sd.socle_monomial ? Json(sd.socle_monomial->to_string()) : Json(nullptr);
      j["complete_intersection"] = cls->complete_intersection;
      if (cert) {
        gorenstein_crosscheck(*cert, *cls);
        j["crosscheck"] = true;
      }
      if (sd.gorenstein) {
        const SocleIdentityReport idr = verify_socle_identities(*cls, x, *g, *hd, *is);
        const Field& fj = *cls->j.gens.front().field();
        j["identities"] = {{"lambdas", elems(fj, idr.lambdas)}, {"essential_form_checked", idr.essential_form_checked}};
      } else {
        j["identities"] = nullptr;
      }
      res["gorenstein"] = std::move(j);
      run.criterion("gorenstein", sd.gorenstein);
    });
  }

  if (opts.selfdual) {
    run.step("selfdual", [&] {
      std::vector<int> orth, dual;
      for (int d = 0; d <= hd->r0; ++d) {
        if (self_orthogonal(x, *g, d)) orth.push_back(d);
        if (self_dual(x, *g, d)) dual.push_back(d);
      }
      Json j = {{"degrees", {0, hd->r0}}, {"self_orthogonal", orth}, {"self_dual", dual}};
      if (cls && cls->data.gorenstein) {
        Json rows = Json::array();
        for (const auto& row : gorenstein_selfdual_classify(x, *g, *hd, *cls)) {
          Json jr = {{"d", row.d}, {"monomially_self_dual", row.monomially_self_dual}, {"self_dual", row.self_dual}};
          jr["column_criterion"] = row.column_criterion ? Json(*row.column_criterion) : Json(nullptr);
          rows.push_back(std::move(jr));
        }
        j["gorenstein_rows"] = std::move(rows);
      }
      res["selfdual"] = std::move(j);
      run.criterion("selfdual", !dual.empty());
    });
  }

  return {std::move(report), run.worst()};
}

int exit_code(Verdict v, bool strict) {
  if (v == Verdict::CriterionFalse && !strict) return 0;
  return static_cast<int>(v);
}

// ---------------------------------------------------------------- table

namespace {

// Display width of UTF-8 text: one column per code point.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t w) { return std::string(w - std::min(w, width(s)), ' ') + s; }

std::string join(const Json& arr, const char* sep = ", ") {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

std::string cell_text(const Json& c) {
  if (c.is_null()) return "-";
  if (c.is_number()) return c.dump();
  const std::string kind = c["kind"];
  if (kind == "exact") return c["value"].dump();
  if (kind == "infinity") return "∞";
  return "[" + c["lo"].dump() + "," + c["hi"].dump() + "]";
}

void matrix(std::ostringstream& os, const Json& rows) {
  std::vector<std::vector<std::string>> text;
  std::size_t w = 1;
  for (const auto& row : rows) {
    auto& tr = text.emplace_back();
    for (const auto& c : row) {
      tr.push_back(cell_text(c));
      w = std::max(w, width(tr.back()));
    }
  }
  for (std::size_t d = 0; d < text.size(); ++d) {
    os << "  d=" << d + 1 << " ";
    for (const auto& t : text[d]) os << ' ' << pad_left(t, w);
    os << '\n';
  }
}

std::string degree_list(const Json& arr, bool only) {
  if (arr.empty()) return "none";
  std::string out;
  for (const auto& d : arr) out += (out.empty() ? "d=" : ",") + d.dump();
  return out + (only && arr.size() == 1 ? " only" : "");
}

}  // namespace

std::string format_table(const Json& report) {
  std::ostringstream os;
  const Json& in = report["input"];
  const Json& fj = in["field"];
  os << "field: F_" << fj["q"].dump() << "  vars: " << in["nvars"].dump() << "  order: " << in["order"].get<std::string>()
     << "  points: " << in["points"].size() << (in["affine"].get<bool>() ? " (affine closure)" : "") << '\n';
  const Json& res = report["results"];
  if (res.contains("vanishing_ideal")) {
    const Json& vi = res["vanishing_ideal"];
    os << "ideal: " << join(vi["generators"]) << '\n';
    os << "minimal generators: " << vi["minimal_generators"].dump()
       << (vi["complete_intersection"].get<bool>() ? " (complete intersection)" : "") << '\n';
    const Json& hj = res["hilbert"];
    os << "H: " << join(hj["H"], " ") << "  h: " << join(hj["h"], " ") << "  r0: " << hj["r0"].dump()
       << (hj["symmetric"].get<bool>() ? "  symmetric" : "") << '\n';
    const Json& vn = res["v_numbers"];
    os << "v: " << vn["v"].dump() << "  v_r: " << join(vn["v_r"], " ") << '\n';
    os << "essential: " << (res["indicators"]["essential"].empty() ? "none" : join(res["indicators"]["essential"]))
       << '\n';
    const Json& fs = res["indicators"]["functions"];
    for (std::size_t i = 0; i < fs.size(); ++i)
      os << "  f" << i + 1 << " = " << fs[i].get<std::string>() << "   f(P) = "
         << res["indicators"]["values"][i].get<std::string>() << '\n';
  }
  if (res.contains("codes")) {
    os << "codes:\n";
    for (const auto& c : res["codes"])
      os << "  d=" << c["d"].dump() << "  dim " << c["dimension"].dump() << "  min distance "
         << (c["min_distance"].is_null() ? std::string("over budget") : c["min_distance"].dump()) << '\n';
  }
  if (res.contains("ghw"))
    for (const auto& c : res["ghw"])
      os << "ghw(d=" << c["d"].dump() << ", r=" << c["r"].dump() << "): "
         << (c["value"].is_null() ? c["status"].get<std::string>() : c["value"].dump()) << '\n';
  if (res.contains("weight_matrix")) {
    const Json& wm = res["weight_matrix"];
    if (wm.contains("cells")) {
      os << "weight matrix:\n";
      matrix(os, wm["cells"]);
    }
    if (wm.contains("fp")) {
      os << "footprint matrix" << (wm["fp_equals_weights"].get<bool>() ? " (equals the weights)" : "") << ":\n";
      matrix(os, wm["fp"]);
    }
  }
  if (res.contains("duality")) {
    const Json& dj = res["duality"];
    os << "duality: " << (dj["holds"].get<bool>() ? "holds" : "fails");
    if (!dj["beta"].is_null()) os << ", beta = (" << join(dj["beta"]) << ")";
    if (!dj["witness"].is_null())
      os << ", witness d=" << dj["witness"]["d"].dump() << ": " << dj["witness"]["reason"].get<std::string>();
    os << '\n';
  }
  if (res.contains("gorenstein")) {
    const Json& gj = res["gorenstein"];
    os << "artinian reduction by h = " << gj["form"].get<std::string>();
    if (gj["extension_degree"].get<int>() > 1) os << " over an extension of degree " << gj["extension_degree"].dump();
    os << '\n';
    os << "  socle: ";
    for (std::size_t i = 0; i < gj["socle"].size(); ++i)
      os << (i ? ", " : "") << gj["socle"][i]["element"].get<std::string>();
    os << "\n  type " << gj["type"].dump() << ", s-number " << gj["s_number"].dump() << ", "
       << (gj["level"].get<bool>() ? "level" : "not level") << ", "
       << (gj["gorenstein"].get<bool>() ? "Gorenstein" : "not Gorenstein") << ", "
       << (gj["complete_intersection"].get<bool>() ? "complete intersection" : "not a complete intersection") << '\n';
  }
  if (res.contains("selfdual")) {
    const Json& sj = res["selfdual"];
    os << "self-orthogonal: " << degree_list(sj["self_orthogonal"], false) << '\n';
    os << "self-dual: " << degree_list(sj["self_dual"], true) << '\n';
    if (sj.contains("gorenstein_rows")) {
      Json mono = Json::array();
      for (const auto& r : sj["gorenstein_rows"])
        if (r["monomially_self_dual"].get<bool>()) mono.push_back(r["d"]);
      os << "monomially self-dual: " << degree_list(mono, false) << '\n';
    }
  }
  for (const auto& e : report["errors"])
    os << "error in " << e["analysis"].get<std::string>() << ": " << e["message"].get<std::string>() << '\n';
  return os.str();
}

// ---------------------------------------------------------------- schema

namespace {

bool type_matches(const std::string& type, const Json& doc) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "boolean") return doc.is_boolean();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  if (type == "null") return doc.is_null();
  return false;
}

void validate_at(const Json& root, const Json& schema, const Json& doc, const std::string& path,
                 std::vector<std::string>& out) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0 || !root["definitions"].contains(ref.substr(prefix.size()))) {
      out.push_back(path + ": unresolved reference " + ref);
      return;
    }
    validate_at(root, root["definitions"][ref.substr(prefix.size())], doc, path, out);
    return;
  }
  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t, doc);
    } else {
      for (const auto& alt : t) ok = ok || type_matches(alt, doc);
    }
    if (!ok) {
      out.push_back(path + ": expected type " + t.dump());
      return;
    }
  }
  if (schema.contains("enum") &&
      std::find(schema["enum"].begin(), schema["enum"].end(), doc) == schema["enum"].end())
    out.push_back(path + ": value " + doc.dump() + " not in enum");
  if (schema.contains("minimum") && doc.is_number() && doc.get<double>() < schema["minimum"].get<double>())
    out.push_back(path + ": below minimum");
  if (schema.contains("anyOf")) {
    bool any = false;
    for (const auto& alt : schema["anyOf"]) {
      std::vector<std::string> sub;
      validate_at(root, alt, doc, path, sub);
      any = any || sub.empty();
    }
    if (!any) out.push_back(path + ": matches no alternative");
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>())) out.push_back(path + ": missing " + key.get<std::string>());
    const Json props = schema.value("properties", Json::object());
    for (const auto& [key, value] : doc.items()) {
      if (props.contains(key)) {
        validate_at(root, props[key], value, path + "/" + key, out);
      } else if (schema.contains("additionalProperties")) {
        const Json& extra = schema["additionalProperties"];
        if (extra.is_boolean()) {
          if (!extra.get<bool>()) out.push_back(path + ": unexpected property " + key);
        } else {
          validate_at(root, extra, value, path + "/" + key, out);
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items"))
    for (std::size_t i = 0; i < doc.size(); ++i)
      validate_at(root, schema["items"], doc[i], path + "/" + std::to_string(i), out);
}

}  // namespace

std::vector<std::string> validate_schema(const Json& schema, const Json& doc) {
  std::vector<std::string> out;
  validate_at(schema, schema, doc, "", out);
  return out;
}

}  // namespace rmcode
