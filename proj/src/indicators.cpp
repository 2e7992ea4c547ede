#include "rmcode/indicators.hpp"

#include <algorithm>

#include "rmcode/error.hpp"

namespace rmcode {

namespace {

// RREF of [A | I_m] with A the m x n matrix A[j][u] = u(P_j).
Rref augmented_system(const ProjectivePointSet& x, const std::vector<Monomial>& delta) {
  const std::size_t m = x.size(), n = delta.size();
  const Matrix ev = evaluation_matrix(x, delta);
  Matrix aug(m, n + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t u = 0; u < n; ++u) aug.at(j, u) = ev.at(u, j);
    aug.at(j, n + j) = 1;
  }
  return rref(*x.field(), std::move(aug));
}

// Solution of A c = e_i from the reduced augmented system, or nothing when
// some zero row of the A block forbids it.
std::optional<std::vector<Elem>> solve_unit(const Rref& red, std::size_t n, std::size_t i) {
  std::vector<Elem> c(n, 0);
  for (std::size_t row = 0; row < red.pivots.size(); ++row) {
    const Elem rhs = red.matrix.at(row, n + i);
    if (red.pivots[row] >= n) {
      if (rhs != 0) return std::nullopt;
      continue;
    }
    c[red.pivots[row]] = rhs;
  }
  return c;
}

}  // namespace

IndicatorSet standard_indicators(const ProjectivePointSet& x, const GroebnerBasis& g) {
  const std::size_t m = x.size();
  IndicatorSet out{g.order, std::vector<Poly>(m, Poly(x.field(), x.nvars())), std::vector<Elem>(m, 0),
                   std::vector<int>(m, -1), {}, {}};
  std::size_t found = 0;
  for (int d = 0; found < m; ++d) {
    if (d > static_cast<int>(m) + 1) fail(ErrorKind::InternalInconsistency, "indicator search did not terminate");
    const auto delta = standard_monomials(g, d);
    const Rref red = augmented_system(x, delta);
    for (std::size_t i = 0; i < m; ++i) {
      if (out.degrees[i] >= 0) continue;
      auto c = solve_unit(red, delta.size(), i);
      if (!c) continue;
      Poly f(x.field(), x.nvars());
      for (std::size_t u = 0; u < delta.size(); ++u) f.add_term(delta[u], (*c)[u]);
      out.fs[i] = f.monic(g.order);
      out.values[i] = out.fs[i].eval(x[i]);
      out.degrees[i] = d;
      ++found;
    }
  }
  out.v_sorted = out.degrees;
  std::sort(out.v_sorted.begin(), out.v_sorted.end());

  std::vector<Monomial> common;
  for (const auto& [mono, c] : out.fs.front().terms()) common.push_back(mono);
  for (const auto& f : out.fs)
    std::erase_if(common, [&](const Monomial& u) { return f.coeff(u) == 0; });
  std::sort(common.begin(), common.end(), [&](const Monomial& a, const Monomial& b) { return g.order.less(b, a); });
  out.essential = std::move(common);
  return out;
}

VNumbers v_numbers(const IndicatorSet& is) {
  VNumbers out;
  out.local = is.degrees;
  out.v_r = is.v_sorted;
  out.v = out.v_r.empty() ? 0 : out.v_r.front();
  return out;
}

bool separable_in_degree(const ProjectivePointSet& x, const GroebnerBasis& g, std::size_t i, int d) {
  if (d < 0) return false;
  const auto delta = standard_monomials(g, d);
  return solve_unit(augmented_system(x, delta), delta.size(), i).has_value();
}

Poly colon_witness(const ProjectivePointSet& x, const GroebnerBasis& g, const IndicatorSet& is, std::size_t i) {
  if (i >= x.size()) fail(ErrorKind::InvalidParams, "point index out of range");
  const Poly& f = is.fs[i];
  const MonomialIdeal in = g.initial_ideal();
  for (const auto& [u, c] : f.terms())
    if (in.contains(u)) fail(ErrorKind::InternalInconsistency, "indicator function has a non-standard term");
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Elem v = f.eval(x[j]);
    if ((j == i) == (v == 0)) fail(ErrorKind::InternalInconsistency, "indicator function does not separate its point");
  }
  if (separable_in_degree(x, g, i, is.degrees[i] - 1))
    fail(ErrorKind::InternalInconsistency, "a lower-degree separator exists");
  return f;
}

}  // namespace rmcode
