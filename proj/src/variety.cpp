#include "rmcode/variety.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rmcode/error.hpp"

namespace rmcode {

Point canonical_representative(const Field& f, std::span<const Elem> p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    const Elem inv = f.inv(p[i]);
    Point out(p.begin(), p.end());
    for (auto& c : out) c = f.mul(c, inv);
    return out;
  }
  fail(ErrorKind::ZeroPoint, "the zero vector is not a projective point");
}

ProjectivePointSet::ProjectivePointSet(FieldPtr field, int nvars, std::vector<Point> points, bool canonicalize)
    : field_(std::move(field)), nvars_(nvars), points_(std::move(points)), canonical_(canonicalize) {
  if (!field_) fail(ErrorKind::InvalidParams, "null field");
  if (nvars_ < 1) fail(ErrorKind::InvalidParams, "need at least one variable");
  std::set<Point> seen;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto& p = points_[i];
    if (static_cast<int>(p.size()) != nvars_)
      fail(ErrorKind::DimensionMismatch, "point " + std::to_string(i + 1) + " has " + std::to_string(p.size()) +
                                             " coordinates, expected " + std::to_string(nvars_));
    for (Elem c : p)
      if (c >= field_->q()) fail(ErrorKind::InvalidParams, "coordinate outside the field");
    Point canon = canonical_representative(*field_, p);
    if (!seen.insert(canon).second)
      fail(ErrorKind::DuplicatePoint, "point " + std::to_string(i + 1) + " repeats an earlier projective point");
    if (canonicalize) p = std::move(canon);
  }
  if (points_.size() < 2) fail(ErrorKind::TooFewPoints, "need at least two points");
  if (!canonicalize) {
    canonical_ = std::all_of(points_.begin(), points_.end(),
                             [&](const Point& p) { return canonical_representative(*field_, p) == p; });
  }
}

ProjectivePointSet ProjectivePointSet::canonical() const { return {field_, nvars_, points_, true}; }

ProjectivePointSet ProjectivePointSet::rescaled(std::span<const Elem> lambdas) const {
  if (lambdas.size() != points_.size()) fail(ErrorKind::DimensionMismatch, "one scalar per point expected");
  std::vector<Point> out = points_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (lambdas[i] == 0) fail(ErrorKind::InvalidParams, "rescaling by zero");
    for (auto& c : out[i]) c = field_->mul(c, lambdas[i]);
  }
  return {field_, nvars_, std::move(out), false};
}

ProjectivePointSet ProjectivePointSet::lifted(const FieldEmbedding& emb) const {
  if (!emb.source->same_as(*field_)) fail(ErrorKind::FieldMismatch, "embedding source differs from the point field");
  std::vector<Point> out = points_;
  for (auto& p : out)
    for (auto& c : p) c = emb(c);
  return {emb.target, nvars_, std::move(out), canonical_};
}

bool ProjectivePointSet::last_coordinates_one() const {
  return std::all_of(points_.begin(), points_.end(), [](const Point& p) { return p.back() == 1; });
}

std::vector<Point> affine_space(const Field& field, int n) {
  std::vector<Point> out;
  Point cur(n, 0);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == field.q() - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

ProjectivePointSet full_projective(const FieldPtr& field, int s) {
  std::vector<Point> pts;
  // Leading part free, then a 1, then zeros: trailing-one position moves left.
  for (int one = s - 1; one >= 0; --one) {
    for (auto& head : affine_space(*field, one)) {
      Point p(head);
      p.push_back(1);
      p.resize(s, 0);
      pts.push_back(std::move(p));
    }
  }
  return {field, s, std::move(pts)};
}

ProjectivePointSet projective_torus(const FieldPtr& field, int s) {
  std::vector<Point> pts;
  for (auto& head : affine_space(*field, s - 1)) {
    if (std::find(head.begin(), head.end(), Elem{0}) != head.end()) continue;
    head.push_back(1);
    pts.push_back(std::move(head));
  }
  return {field, s, std::move(pts)};
}

ProjectivePointSet parameterized_points(const FieldPtr& field, const std::vector<std::vector<int>>& exponents) {
  const int s = static_cast<int>(exponents.size());
  if (s < 1) fail(ErrorKind::InvalidParams, "need at least one exponent vector");
  const std::size_t n = exponents.front().size();
  for (const auto& v : exponents)
    if (v.size() != n) fail(ErrorKind::InvalidParams, "exponent vectors differ in length");
  const Field& f = *field;
  std::vector<Point> pts;
  std::set<Point> seen;
  for (const auto& y : affine_space(f, static_cast<int>(n))) {
    if (std::find(y.begin(), y.end(), Elem{0}) != y.end()) continue;
    Point p(s, 1);
    for (int i = 0; i < s; ++i)
      for (std::size_t j = 0; j < n; ++j) p[i] = f.mul(p[i], f.pow(y[j], exponents[i][j]));
    Point canon = canonical_representative(f, p);
    if (seen.insert(canon).second) pts.push_back(std::move(canon));
  }
  return {field, s, std::move(pts)};
}

ProjectivePointSet projective_closure(const FieldPtr& field, int n, const std::vector<Point>& affine) {
  std::vector<Point> pts;
  for (const auto& q : affine) {
    if (static_cast<int>(q.size()) != n) fail(ErrorKind::DimensionMismatch, "affine point of wrong length");
    Point p(q);
    p.push_back(1);
    pts.push_back(std::move(p));
  }
  return {field, n + 1, std::move(pts)};
}

// ---------------------------------------------------------------- file format

namespace {

[[noreturn]] void parse_error(std::size_t line, std::size_t col, const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct Token {
  std::string text;
  std::size_t col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

long long parse_int(const Token& t, std::size_t line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    parse_error(line, t.col, "expected an integer, got '" + t.text + "'");
  }
}

}  // namespace

PointsFile parse_points_file(std::string_view text) {
  PointsFile out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  int stage = 0;  // 0 expect field, 1 expect vars, 2 order or points
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (stage == 0) {
      if (toks[0].text != "field") parse_error(lineno, toks[0].col, "expected 'field p k [modulus...]'");
      if (toks.size() < 2) parse_error(lineno, toks[0].col, "missing characteristic");
      const long long p = parse_int(toks[1], lineno);
      const long long k = toks.size() > 2 ? parse_int(toks[2], lineno) : 1;
      if (p < 2 || p > 1000003 || k < 1 || k > 20) parse_error(lineno, toks[1].col, "field parameters out of range");
      std::optional<std::vector<int>> modulus;
      if (toks.size() > 3) {
        if (static_cast<long long>(toks.size()) != 3 + k + 1)
          parse_error(lineno, toks[3].col, "modulus needs k+1 = " + std::to_string(k + 1) + " coefficients");
        std::vector<int> m;
        for (std::size_t i = 3; i < toks.size(); ++i) {
          const long long c = parse_int(toks[i], lineno);
          m.push_back(static_cast<int>(((c % p) + p) % p));
        }
        modulus = std::move(m);
      }
      out.field = Field::create(static_cast<int>(p), static_cast<int>(k), modulus);
      stage = 1;
    } else if (stage == 1) {
      if (toks[0].text != "vars" || toks.size() != 2) parse_error(lineno, toks[0].col, "expected 'vars s'");
      const long long s = parse_int(toks[1], lineno);
      if (s < 1 || s > 32) parse_error(lineno, toks[1].col, "variable count out of range");
      out.nvars = static_cast<int>(s);
      stage = 2;
    } else {
      if (toks[0].text == "order") {
        if (!out.coords.empty()) parse_error(lineno, toks[0].col, "order must precede the points");
        if (out.order) parse_error(lineno, toks[0].col, "duplicate order line");
        std::string spec;
        for (std::size_t i = 1; i < toks.size(); ++i) spec += (i > 1 ? " " : "") + toks[i].text;
        try {
          out.order = TermOrder::parse(spec, out.nvars);
        } catch (const Error& e) {
          parse_error(lineno, toks.size() > 1 ? toks[1].col : toks[0].col, e.what());
        }
        continue;
      }
      if (static_cast<int>(toks.size()) != out.nvars)
        parse_error(lineno, toks[0].col,
                    "expected " + std::to_string(out.nvars) + " coordinates, got " + std::to_string(toks.size()));
      Point p;
      for (const auto& t : toks) {
        try {
          p.push_back(out.field->parse(t.text));
        } catch (const Error& e) {
          parse_error(lineno, t.col, e.what());
        }
      }
      out.coords.push_back(std::move(p));
    }
  }
  if (stage == 0) parse_error(lineno + 1, 1, "empty points file");
  if (stage == 1) parse_error(lineno + 1, 1, "missing 'vars' line");
  return out;
}

std::string format_points_file(const ProjectivePointSet& x, const std::optional<TermOrder>& order) {
  const Field& f = *x.field();
  std::ostringstream os;
  os << "field " << f.p() << ' ' << f.k();
  if (f.k() > 1)
    for (int c : f.modulus()) os << ' ' << c;
  os << "\nvars " << x.nvars() << '\n';
  if (order) os << "order " << order->describe() << '\n';
  for (const auto& p : x.points()) {
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << f.format(p[i]);
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- evaluation

Elem monomial_value(const Field& f, const Monomial& u, std::span<const Elem> point) {
  Elem v = 1;
  for (int i = 0; i < u.nvars() && v != 0; ++i)
    if (u[i] > 0) v = f.mul(v, f.pow(point[i], u[i]));
  return v;
}

Matrix evaluation_matrix(const ProjectivePointSet& x, std::span<const Monomial> monos) {
  Matrix out(monos.size(), x.size());
  for (std::size_t r = 0; r < monos.size(); ++r)
    for (std::size_t j = 0; j < x.size(); ++j) out.at(r, j) = monomial_value(*x.field(), monos[r], x[j]);
  return out;
}

std::vector<Elem> evaluate(const Poly& f, const ProjectivePointSet& x) {
  std::vector<Elem> out;
  for (const auto& p : x.points()) out.push_back(f.eval(p));
  return out;
}

// ---------------------------------------------------------------- vanishing ideal

GroebnerBasis vanishing_ideal(const ProjectivePointSet& x, const TermOrder& order) {
  if (order.nvars() != x.nvars()) fail(ErrorKind::DimensionMismatch, "order and points differ in variable count");
  const Field& f = *x.field();
  const std::size_t m = x.size();
  GroebnerBasis gb{order, {}, false};
  std::vector<Monomial> lms;

  int r0 = -1;
  for (int d = 0; r0 < 0 || d <= r0 + 1; ++d) {
    std::vector<Monomial> cands;
    for (auto& u : monomials_of_degree(x.nvars(), d))
      if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(u); }))
        cands.push_back(std::move(u));
    std::sort(cands.begin(), cands.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });

    // Echelon rows: evaluation vector with its pivot, and the combination of
    // candidates producing it.
    struct Row {
      std::vector<Elem> vec;
      std::vector<Elem> comb;
      std::size_t pivot;
    };
    std::vector<Row> rows;
    std::size_t accepted = 0;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      std::vector<Elem> v(m);
      for (std::size_t j = 0; j < m; ++j) v[j] = monomial_value(f, cands[ci], x[j]);
      std::vector<Elem> comb(cands.size(), 0);
      comb[ci] = 1;
      for (const auto& row : rows) {
        const Elem c = v[row.pivot];
        if (c == 0) continue;
        axpy(f, f.neg(c), row.vec, v);
        axpy(f, f.neg(c), row.comb, comb);
      }
      auto nz = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
      if (nz != v.end()) {
        const std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
        const Elem inv = f.inv(*nz);
        for (auto& e : v) e = f.mul(e, inv);
        for (auto& e : comb) e = f.mul(e, inv);
        // Keep rows reduced at the new pivot so later reductions stay one pass.
        for (auto& row : rows) {
          const Elem c = row.vec[pivot];
          if (c == 0) continue;
          axpy(f, f.neg(c), v, row.vec);
          axpy(f, f.neg(c), comb, row.comb);
        }
        rows.push_back({std::move(v), std::move(comb), pivot});
        ++accepted;
        continue;
      }
      Poly g(x.field(), x.nvars());
      for (std::size_t k = 0; k <= ci; ++k) g.add_term(cands[k], comb[k]);
      gb.gens.push_back(g.monic(order));
      lms.push_back(cands[ci]);
    }
    if (accepted > m) fail(ErrorKind::InternalInconsistency, "Hilbert function exceeds the number of points");
    if (r0 < 0 && accepted == m) r0 = d;
  }

  std::stable_sort(gb.gens.begin(), gb.gens.end(), [&](const Poly& a, const Poly& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  if (gb_certify(gb)) {
    gb.certified = true;
    return gb;
  }
  GroebnerBasis fallback = buchberger(gb.gens, order);
  if (!gb_certify(fallback)) fail(ErrorKind::CertificationFailed, "vanishing ideal could not be certified");
  return fallback;
}

// ---------------------------------------------------------------- Hilbert data

long long HilbertData::at(int d) const {
  if (d < 0) return 0;
  if (d >= r0) return degree;
  return H[d];
}

HilbertData hilbert_data(const GroebnerBasis& g, long long m) {
  if (m < 1) fail(ErrorKind::InvalidParams, "degree must be positive");
  HilbertData hd;
  hd.degree = m;
  const MonomialIdeal in = g.initial_ideal();
  for (int d = 0;; ++d) {
    const long long h = static_cast<long long>(standard_monomials(in, d).size());
    if (h > m || (!hd.H.empty() && h <= hd.H.back() && h != m))
      fail(ErrorKind::InternalInconsistency, "Hilbert function is not that of a reduced set of " + std::to_string(m) +
                                                 " points");
    hd.H.push_back(h);
    if (h == m) {
      hd.r0 = d;
      break;
    }
  }
  for (int d = 0; d <= hd.r0; ++d) hd.h.push_back(hd.H[d] - (d > 0 ? hd.H[d - 1] : 0));
  hd.a_invariant = hd.r0 - 1;
  hd.symmetric = true;
  for (int d = 0; d <= hd.r0; ++d) hd.symmetric = hd.symmetric && hd.h[d] == hd.h[hd.r0 - d];
  return hd;
}

bool symmetry_equiv_check(const HilbertData& hd) {
  bool sums = true;
  for (int d = 0; d <= hd.r0; ++d) sums = sums && hd.at(d) + hd.at(hd.r0 - d - 1) == hd.degree;
  if (sums != hd.symmetric)
    fail(ErrorKind::InternalInconsistency, "h-vector symmetry disagrees with the Hilbert function sum test");
  return sums;
}

}  // namespace rmcode
