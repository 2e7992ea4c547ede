#include "rmcode/artinian.hpp"

#include <algorithm>
#include <string>

#include "rmcode/error.hpp"

namespace rmcode {

namespace {

bool avoids_all(const Field& f, std::span<const Elem> coeffs, const ProjectivePointSet& x) {
  return std::all_of(x.points().begin(), x.points().end(),
                     [&](const Point& p) { return dot(f, coeffs, p) != 0; });
}

Poly linear_form(const FieldPtr& field, std::span<const Elem> coeffs) {
  const int s = static_cast<int>(coeffs.size());
  Poly h(field, s);
  for (int j = 0; j < s; ++j)
    if (coeffs[j] != 0) h.add_term(Monomial::variable(s, j), coeffs[j]);
  return h;
}

// Candidate forms over `field` in preference order; returns the first that avoids X.
std::optional<Poly> search_forms(const FieldPtr& field, const ProjectivePointSet& x, const TermOrder& order) {
  const int s = x.nvars();
  const Field& f = *field;
  std::vector<Elem> c(s, 0);
  for (auto it = order.perm().rbegin(); it != order.perm().rend(); ++it) {
    std::fill(c.begin(), c.end(), 0);
    c[*it] = 1;
    if (avoids_all(f, c, x)) return linear_form(field, c);
  }
  // General forms: first nonzero coefficient 1, odometer over the rest.
  for (int lead = 0; lead < s; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    while (true) {
      const bool single = std::count(c.begin(), c.end(), Elem{0}) == static_cast<std::ptrdiff_t>(s - 1);
      if (!single && avoids_all(f, c, x)) return linear_form(field, c);
      int j = s - 1;
      while (j > lead && c[j] == f.q() - 1) c[j--] = 0;
      if (j == lead) break;
      ++c[j];
    }
  }
  return std::nullopt;
}

bool is_smallest_variable(const Poly& h, const TermOrder& order) {
  if (order.kind() != OrderKind::GRevLex || h.size() != 1) return false;
  return h.terms().begin()->first == Monomial::variable(order.nvars(), order.last_variable());
}

void identity_check(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::IdentityViolated, what);
}

}  // namespace

RegularForm find_regular_linear_form(const ProjectivePointSet& x, const TermOrder& order) {
  if (order.nvars() != x.nvars()) fail(ErrorKind::DimensionMismatch, "order and points differ in variable count");
  if (auto h = search_forms(x.field(), x, order)) return {*h, 1, std::nullopt};
  // Over F_{q^e} with q^e >= m some form avoids the m points, so this terminates.
  for (int e = 2;; ++e) {
    FieldEmbedding emb = extend_field(x.field(), e);
    const ProjectivePointSet lifted = x.lifted(emb);
    if (auto h = search_forms(emb.target, lifted, order)) return {*h, e, std::move(emb)};
  }
}

Poly lift_poly(const Poly& f, const FieldEmbedding& emb) {
  if (!emb.source->same_as(*f.field())) fail(ErrorKind::FieldMismatch, "embedding source differs from the polynomial field");
  Poly out(emb.target, f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, emb(c));
  return out;
}

GroebnerBasis lift_basis(const GroebnerBasis& g, const FieldEmbedding& emb) {
  GroebnerBasis out{g.order, {}, g.certified};
  for (const auto& p : g.gens) out.gens.push_back(lift_poly(p, emb));
  return out;
}

GroebnerBasis artinian_reduce(const GroebnerBasis& g, const Poly& h) {
  if (h.is_zero() || h.degree() != 1 || !h.is_homogeneous())
    fail(ErrorKind::InvalidParams, "h must be a nonzero linear form");
  const TermOrder& order = g.order;
  std::optional<GroebnerBasis> j;
  if (is_smallest_variable(h, order)) {
    const int ts = order.last_variable();
    const Monomial var = Monomial::variable(order.nvars(), ts);
    GroebnerBasis cand{order, {Poly::term(h.field(), var)}, false};
    bool shortcut = true;
    for (const auto& p : g.gens) {
      if (p.leading_monomial(order)[ts] > 0) {
        shortcut = false;  // t_s is then a zero divisor; let the general path report it
        break;
      }
      Poly stripped(p.field(), p.nvars());
      for (const auto& [m, c] : p.terms())
        if (m[ts] == 0) stripped.add_term(m, c);
      cand.gens.push_back(std::move(stripped));
    }
    if (shortcut) {
      std::sort(cand.gens.begin(), cand.gens.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
      });
      cand.certified = gb_certify(cand);
      if (cand.certified) j = std::move(cand);
    }
  }
  if (!j) {
    std::vector<Poly> gens = g.gens;
    gens.push_back(h);
    j = buchberger(gens, order);
    j->certified = true;
  }
  try {
    if (monomial_dim_degree(j->initial_ideal()).first != 0)
      fail(ErrorKind::NotRegular, "h is a zero divisor: S/(I, h) is not Artinian");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DimensionTooLarge) throw;
    fail(ErrorKind::NotRegular, "h is a zero divisor: S/(I, h) is not Artinian");
  }
  return std::move(*j);
}

SocleData socle(const GroebnerBasis& j) {
  const MonomialIdeal in = j.initial_ideal();
  bool artinian = false;
  try {
    artinian = monomial_dim_degree(in).first == 0;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DimensionTooLarge) throw;
  }
  if (!artinian) fail(ErrorKind::NotArtinian, "S/J has positive Krull dimension");

  const int s = j.nvars();
  const FieldPtr field = j.gens.front().field();
  std::vector<std::vector<Monomial>> delta;
  for (int d = 0;; ++d) {
    auto std_d = standard_monomials(in, d);
    if (std_d.empty()) break;
    delta.push_back(std::move(std_d));
  }

  SocleData out;
  for (const auto& level : delta) out.hilbert.push_back(static_cast<long long>(level.size()));
  const int top = static_cast<int>(delta.size()) - 1;
  for (int e = 0; e <= top; ++e) {
    const auto& src = delta[e];
    Matrix kernel(0, src.size());
    if (e == top) {
      kernel = Matrix(src.size(), src.size());
      for (std::size_t i = 0; i < src.size(); ++i) kernel.at(i, i) = 1;
    } else {
      const auto& dst = delta[e + 1];
      Matrix mult(s * dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c)
        for (int i = 0; i < s; ++i) {
          const Poly r = normal_form(Poly::term(field, src[c] * Monomial::variable(s, i)), j);
          for (std::size_t row = 0; row < dst.size(); ++row) mult.at(i * dst.size() + row, c) = r.coeff(dst[row]);
        }
      kernel = nullspace(*field, mult);
    }
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
      Poly f(field, s);
      for (std::size_t c = 0; c < src.size(); ++c) f.add_term(src[c], kernel.at(k, c));
      out.socle.push_back({f.monic(j.order), e});
    }
    if (kernel.rows() > 0) out.socle_degrees.push_back(e);
  }
  out.type = static_cast<int>(out.socle.size());
  out.level = out.socle_degrees.size() == 1;
  out.gorenstein = out.type == 1;
  out.s_number = out.socle_degrees.front();
  if (out.gorenstein) {
    if (delta[top].size() != 1) fail(ErrorKind::InternalInconsistency, "Gorenstein reduction with several top monomials");
    out.socle_monomial = delta[top].front();
  }
  return out;
}

ArtinianClassification classify_artinian(const ProjectivePointSet& x, const GroebnerBasis& g, const HilbertData& hd,
                                         const std::optional<Poly>& h) {
  RegularForm form = h ? RegularForm{*h, 1, std::nullopt} : find_regular_linear_form(x, g.order);
  if (h) {
    if (!h->field()->same_as(*x.field()) || h->nvars() != x.nvars())
      fail(ErrorKind::RingMismatch, "h is not a form in the ring of the points");
    for (std::size_t i = 0; i < x.size(); ++i)
      if (h->eval(x[i]) == 0) fail(ErrorKind::NotRegular, "h vanishes at point " + std::to_string(i + 1));
  }
  const GroebnerBasis base = form.embedding ? lift_basis(g, *form.embedding) : g;
  GroebnerBasis j = artinian_reduce(base, form.h);
  SocleData data = socle(j);

  const int top = static_cast<int>(data.hilbert.size()) - 1;
  ArtinianClassification cls{std::move(form), std::move(j), std::move(data), top == hd.r0, false};
  cls.complete_intersection = minimal_generator_count(g, hd.r0 + 1) == x.nvars() - 1;

  const SocleData& sd = cls.data;
  auto trap = [](bool ok, const char* what) {
    if (!ok) fail(ErrorKind::InternalInconsistency, what);
  };
  trap(cls.reg_check, "top degree of S/J differs from the regularity index");
  trap(sd.hilbert == hd.h, "Hilbert function of S/J differs from the h-vector");
  trap(sd.type >= 1, "empty socle");
  trap(!sd.gorenstein || sd.level, "Gorenstein but not level");
  trap(!(sd.level && hd.symmetric) || sd.gorenstein, "level with symmetric h-vector but not Gorenstein");
  trap(!cls.complete_intersection || sd.gorenstein, "complete intersection but not Gorenstein");
  return cls;
}

SocleIdentityReport verify_socle_identities(const ArtinianClassification& cls, const ProjectivePointSet& x,
                                            const GroebnerBasis& g, const HilbertData& hd, const IndicatorSet& is) {
  if (!cls.data.gorenstein) fail(ErrorKind::PreconditionFailed, "socle identities need a Gorenstein reduction");
  const Monomial& ta = *cls.data.socle_monomial;
  const auto& emb = cls.form.embedding;
  SocleIdentityReport report;
  for (std::size_t i = 0; i < is.fs.size(); ++i) {
    const Poly fi = emb ? lift_poly(is.fs[i], *emb) : is.fs[i];
    const Poly r = normal_form(fi, cls.j);
    identity_check(r.size() == 1 && r.terms().begin()->first == ta,
                   "remainder of f_" + std::to_string(i + 1) + " modulo J is not a multiple of the socle monomial");
    report.lambdas.push_back(r.terms().begin()->second);
    identity_check(is.degrees[i] == hd.r0, "deg f_" + std::to_string(i + 1) + " differs from r0");
  }

  const TermOrder& order = g.order;
  const int ts = order.last_variable();
  const bool on_chart = std::all_of(x.points().begin(), x.points().end(), [&](const Point& p) { return p[ts] == 1; });
  if (!emb && is_smallest_variable(cls.form.h, order) && on_chart) {
    identity_check(std::find(is.essential.begin(), is.essential.end(), ta) != is.essential.end(),
                   "socle monomial is not essential");
    identity_check(ta[ts] == 0, "socle monomial involves the smallest variable");
    for (std::size_t i = 0; i < is.fs.size(); ++i) {
      identity_check(report.lambdas[i] == is.fs[i].leading_coeff(order),
                     "lambda_" + std::to_string(i + 1) + " differs from the leading coefficient");
      for (const auto& [m, c] : is.fs[i].terms())
        identity_check(m == ta || m[ts] > 0,
                       "f_" + std::to_string(i + 1) + " minus its socle term is not divisible by the smallest variable");
    }
    const MonomialIdeal in = g.initial_ideal();
    const Monomial var = Monomial::variable(g.nvars(), ts);
    for (int d = 0; d <= hd.r0; ++d)
      for (const auto& b : standard_monomials(in, d)) {
        Monomial shifted = b;
        for (int l = 1; l <= 3; ++l) {
          shifted = shifted * var;
          identity_check(!in.contains(shifted), "multiplying a standard monomial by the smallest variable left the footprint");
        }
      }
    report.essential_form_checked = true;
  }
  return report;
}

}  // namespace rmcode
