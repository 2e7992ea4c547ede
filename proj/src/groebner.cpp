#include "rmcode/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rmcode/error.hpp"
#include "rmcode/linalg.hpp"

namespace rmcode {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

const Poly* find_reducer(const std::vector<Poly>& gens, const std::vector<Monomial>& lms, const Monomial& m) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (lms[i].divides(m)) return &gens[i];
  return nullptr;
}

// Remainder of f modulo the list, whose leading monomials are given.
Poly reduce_by(const Poly& f, const std::vector<Poly>& gens, const std::vector<Monomial>& lms,
               const TermOrder& order) {
  const Field& fld = *f.field();
  Poly p = f;
  Poly r(f.field(), f.nvars());
  while (!p.is_zero()) {
    auto [m, c] = p.leading_term(order);
    if (const Poly* g = find_reducer(gens, lms, m)) {
      auto [gm, gc] = g->leading_term(order);
      p = p - g->times(m / gm, fld.div(c, gc));
    } else {
      r.add_term(m, c);
      p = p - Poly::term(f.field(), m, c);
    }
  }
  return r;
}

Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& order) {
  const Field& fld = *f.field();
  auto [fm, fc] = f.leading_term(order);
  auto [gm, gc] = g.leading_term(order);
  const Monomial l = fm.lcm(gm);
  return f.times(l / fm, fld.inv(fc)) - g.times(l / gm, fld.inv(gc));
}

}  // namespace

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens)
    if (g.nvars() != nvars) fail(ErrorKind::DimensionMismatch, "monomial generator has wrong variable count");
  gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  std::vector<Monomial> all(gens_);
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(nvars_, std::move(all));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Monomial> all;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) all.push_back(a.lcm(b));
  return MonomialIdeal(nvars_, std::move(all));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(g.lcm(m) / m);
  return MonomialIdeal(nvars_, std::move(out));
}

// ---------------------------------------------------------------- GroebnerBasis

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : gens) out.push_back(g.leading_monomial(order));
  return out;
}

MonomialIdeal GroebnerBasis::initial_ideal() const { return MonomialIdeal(nvars(), leading_monomials()); }

Poly normal_form(const Poly& f, const GroebnerBasis& g) {
  if (f.nvars() != g.nvars()) fail(ErrorKind::RingMismatch, "polynomial and basis live in different rings");
  if (!g.gens.empty() && !f.field()->same_as(*g.gens.front().field()))
    fail(ErrorKind::RingMismatch, "polynomial and basis are over different fields");
  return reduce_by(f, g.gens, g.leading_monomials(), g.order);
}

bool gb_certify(const GroebnerBasis& g) {
  const auto lms = g.leading_monomials();
  for (std::size_t i = 0; i < g.gens.size(); ++i)
    for (std::size_t j = i + 1; j < g.gens.size(); ++j) {
      if (lms[i].coprime(lms[j])) continue;
      if (!reduce_by(s_polynomial(g.gens[i], g.gens[j], g.order), g.gens, lms, g.order).is_zero()) return false;
    }
  return true;
}

GroebnerBasis buchberger(std::span<const Poly> input, const TermOrder& order) {
  GroebnerBasis out{order, {}, true};
  std::vector<Poly> basis;
  std::vector<Monomial> lms;
  for (const auto& f : input) {
    if (f.nvars() != order.nvars()) fail(ErrorKind::DimensionMismatch, "generator and order differ in variable count");
    if (!f.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "buchberger expects homogeneous generators");
    if (!basis.empty() && !basis.front().field()->same_as(*f.field()))
      fail(ErrorKind::RingMismatch, "generators over different fields");
    Poly r = reduce_by(f, basis, lms, order);
    if (r.is_zero()) continue;
    r = r.monic(order);
    lms.push_back(r.leading_monomial(order));
    basis.push_back(std::move(r));
  }
  if (basis.empty()) return out;

  // Pairs keyed by (lcm degree, lcm, i, j) so the normal strategy is deterministic.
  struct Pair {
    int degree;
    Monomial lcm;
    std::size_t i, j;
    bool operator<(const Pair& o) const {
      if (degree != o.degree) return degree < o.degree;
      if (lcm != o.lcm) return lcm < o.lcm;
      return std::pair(i, j) < std::pair(o.i, o.j);
    }
  };
  std::set<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (lms[i].coprime(lms[j])) continue;
      const Monomial l = lms[i].lcm(lms[j]);
      pairs.insert({l.degree(), l, i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    const Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    Poly r = reduce_by(s_polynomial(basis[pr.i], basis[pr.j], order), basis, lms, order);
    if (r.is_zero()) continue;
    r = r.monic(order);
    lms.push_back(r.leading_monomial(order));
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !lms[j].divides(lms[i])) continue;
      // Equal leading monomials: keep the earlier one.
      redundant = lms[j] != lms[i] || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Poly> minimal;
  std::vector<Monomial> min_lms;
  for (auto i : keep) {
    minimal.push_back(basis[i]);
    min_lms.push_back(lms[i]);
  }

  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const Poly lead = Poly::term(minimal[i].field(), min_lms[i], 1);
    Poly tail = minimal[i] - lead;
    std::vector<Poly> others;
    std::vector<Monomial> other_lms;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      other_lms.push_back(min_lms[j]);
    }
    minimal[i] = lead + reduce_by(tail, others, other_lms, order);
  }

  std::vector<std::size_t> idx(minimal.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return order.less(min_lms[a], min_lms[b]); });
  for (auto i : idx) out.gens.push_back(minimal[i]);
  return out;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& l, int d) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(l.nvars(), d))
    if (!l.contains(m)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& g, int d) {
  auto out = standard_monomials(g.initial_ideal(), d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return g.order.less(b, a); });
  return out;
}

std::pair<int, long long> monomial_dim_degree(const MonomialIdeal& l) {
  const int s = l.nvars();
  if (s > 16) fail(ErrorKind::DimensionTooLarge, "too many variables for the vertex-cover search");
  for (const auto& g : l.gens())
    if (g.degree() == 0) fail(ErrorKind::InvalidParams, "monomial ideal is not proper");
  // dim S/L = s - minimum size of a variable set meeting every generator support.
  int min_cover = s;
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= min_cover) continue;
    bool covers = true;
    for (const auto& g : l.gens()) {
      bool hit = false;
      for (int v : g.support()) hit = hit || ((mask >> v) & 1u);
      if (!hit) {
        covers = false;
        break;
      }
    }
    if (covers) min_cover = size;
  }
  const int dim = s - min_cover;
  if (dim >= 2) fail(ErrorKind::DimensionTooLarge, "monomial quotient has dimension " + std::to_string(dim));

  int bound = 0;
  for (int v = 0; v < s; ++v) {
    int mx = 0;
    for (const auto& g : l.gens()) mx = std::max(mx, g[v]);
    bound += mx;
  }
  auto count = [&](int d) { return static_cast<long long>(standard_monomials(l, d).size()); };
  if (dim == 0) {
    long long total = 0;
    for (int d = 0; d <= bound; ++d) total += count(d);
    return {0, total};
  }
  long long prev = count(bound);
  for (int d = bound + 1; d <= 4 * bound + 4; ++d) {
    const long long cur = count(d);
    if (cur == prev) return {1, cur};
    prev = cur;
  }
  fail(ErrorKind::InternalInconsistency, "Hilbert function of a one-dimensional monomial quotient did not stabilize");
}

MonomialIdeal monomial_colon(const MonomialIdeal& l, std::span<const Monomial> f) {
  if (f.empty()) fail(ErrorKind::InvalidParams, "colon by the empty set");
  MonomialIdeal acc = l.colon(f.front());
  for (std::size_t i = 1; i < f.size(); ++i) acc = acc.intersect(l.colon(f[i]));
  return acc;
}

int minimal_generator_count(const GroebnerBasis& g, int max_degree) {
  if (g.gens.empty()) return 0;
  const FieldPtr& field = g.gens.front().field();
  const int s = g.nvars();
  int total = 0;
  for (int d = 1; d <= max_degree; ++d) {
    const auto monos = monomials_of_degree(s, d);
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i], i);
    auto rank_of = [&](bool strictly_lower) {
      Matrix rows(0, monos.size());
      for (const auto& gen : g.gens) {
        const int e = gen.degree();
        if (e > d || (strictly_lower && e == d)) continue;
        for (const auto& u : monomials_of_degree(s, d - e)) {
          std::vector<Elem> v(monos.size(), 0);
          for (const auto& [m, c] : gen.terms()) v[col.at(m * u)] = c;
          rows.append_row(v);
        }
      }
      return rows.rows() == 0 ? std::size_t{0} : rank(*field, rows);
    };
    total += static_cast<int>(rank_of(false) - rank_of(true));
  }
  return total;
}

}  // namespace rmcode
