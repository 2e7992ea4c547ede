#include "rmcode/duality.hpp"

#include <algorithm>

namespace rmcode {

namespace {

std::string str(long long v) { return std::to_string(v); }

void trap(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InternalInconsistency, what);
}

// First d in 0..r0 where C_X(d)^perp != beta * C_X(r0-d-1), if any.
std::optional<int> first_duality_failure(const ProjectivePointSet& x, const GroebnerBasis& g, int r0,
                                         std::span<const Elem> beta) {
  for (int d = 0; d <= r0; ++d)
    if (!(dual_code(code_of_degree(x, g, d)) == scale_code(code_of_degree(x, g, r0 - d - 1), beta))) return d;
  return std::nullopt;
}

std::optional<std::vector<Elem>> try_parity_vector(const ProjectivePointSet& x, const GroebnerBasis& g, int r0) {
  const LinearCode dual = dual_code(code_of_degree(x, g, r0 - 1));
  if (dual.dimension() != 1) return std::nullopt;
  const auto row = dual.basis().row(0);
  std::vector<Elem> beta(row.begin(), row.end());
  if (std::find(beta.begin(), beta.end(), Elem{0}) != beta.end()) return std::nullopt;
  const Field& f = *x.field();
  const Elem scale = f.inv(beta.back());
  for (auto& b : beta) b = f.mul(b, scale);
  return beta;
}

int common_degree(const std::vector<Monomial>& gamma, const GroebnerBasis& g, const char* name) {
  const MonomialIdeal in = g.initial_ideal();
  for (const auto& u : gamma) {
    if (u.nvars() != g.nvars()) fail(ErrorKind::DimensionMismatch, std::string(name) + " has a monomial in the wrong ring");
    if (u.degree() != gamma.front().degree()) fail(ErrorKind::InvalidParams, std::string(name) + " mixes degrees");
    if (in.contains(u)) fail(ErrorKind::InvalidParams, std::string(name) + " contains " + u.to_string() + ", which is not standard");
  }
  return gamma.empty() ? -1 : gamma.front().degree();
}

}  // namespace

std::vector<Elem> parity_check_vector(const ProjectivePointSet& x, const GroebnerBasis& g, const HilbertData& hd) {
  auto beta = try_parity_vector(x, g, hd.r0);
  if (!beta) fail(ErrorKind::NotApplicable, "C_X(r0-1)^perp is not spanned by a vector with nonzero entries");
  return *beta;
}

std::vector<Elem> indicator_beta(const ProjectivePointSet& x, const IndicatorSet& is) {
  const Field& f = *x.field();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < is.fs.size(); ++i) out.push_back(f.div(is.fs[i].leading_coeff(is.order), is.values[i]));
  return out;
}

DualityCertificate global_duality(const ProjectivePointSet& x, const GroebnerBasis& g, const HilbertData& hd,
                                  const IndicatorSet& is) {
  const long long m = static_cast<long long>(x.size());
  const int r0 = hd.r0;
  DualityCertificate cert;

  std::optional<FailureWitness> sum_witness;
  for (int d = 0; d <= r0 && !sum_witness; ++d) {
    const long long total = hd.at(d) + hd.at(r0 - d - 1);
    if (total != m)
      sum_witness = FailureWitness{d, "H(" + str(d) + ") + H(" + str(r0 - d - 1) + ") = " + str(total) + " != " + str(m)};
  }
  cert.symmetric_sum = !sum_witness;
  const int v = *std::min_element(is.degrees.begin(), is.degrees.end());
  cert.v_all_r0 = std::all_of(is.degrees.begin(), is.degrees.end(), [&](int vi) { return vi == r0; });
  cert.holds = cert.symmetric_sum && cert.v_all_r0;

  if (!cert.v_all_r0) {
    cert.failure_witness = v < r0 ? FailureWitness{v, "v(I) = " + str(v) + " < r0 = " + str(r0)}
                                  : FailureWitness{v, "local v-numbers are not all equal to r0 = " + str(r0)};
  } else if (sum_witness) {
    cert.failure_witness = sum_witness;
  }

  const auto beta = try_parity_vector(x, g, r0);
  if (!cert.holds) {
    // The criterion is an equivalence, so a passing direct check would contradict it.
    trap(!beta || first_duality_failure(x, g, r0, *beta).has_value(),
         "duality criterion fails but the direct check passes at every degree");
    return cert;
  }
  trap(beta.has_value(), "duality criterion holds but C_X(r0-1)^perp has no full-support spanning vector");
  cert.beta = *beta;
  const auto bad = first_duality_failure(x, g, r0, cert.beta);
  trap(!bad, "duality criterion holds but the direct check fails at d = " + (bad ? str(*bad) : std::string()));
  for (int d = 0; d <= r0; ++d) cert.verified_degrees.push_back(d);
  return cert;
}

bool gorenstein_crosscheck(const DualityCertificate& cert, const ArtinianClassification& cls) {
  trap(cert.holds == cls.data.gorenstein, "duality certificate and Gorenstein classification disagree");
  return cert.holds;
}

LocalDualityVerdict local_duality_verify(const ProjectivePointSet& x, const GroebnerBasis& g, const HilbertData& hd,
                                         const IndicatorSet& is, const std::vector<Monomial>& gamma1,
                                         const std::vector<Monomial>& gamma2, const Monomial& te,
                                         bool projective_mode) {
  const std::size_t m = x.size();
  const int r0 = hd.r0;
  if (std::find(is.essential.begin(), is.essential.end(), te) == is.essential.end())
    fail(ErrorKind::NotEssential, te.to_string() + " is not an essential monomial");
  int d = common_degree(gamma1, g, "first list");
  int k = common_degree(gamma2, g, "second list");

  if (projective_mode) {
    const TermOrder& order = g.order;
    const int ts = order.last_variable();
    if (order.kind() != OrderKind::GRevLex) fail(ErrorKind::PreconditionFailed, "projective mode needs GRevLex");
    if (!std::all_of(x.points().begin(), x.points().end(), [&](const Point& p) { return p[ts] == 1; }))
      fail(ErrorKind::PreconditionFailed, "projective mode needs the smallest variable equal to 1 at every point");
    const bool gorenstein =
        hd.symmetric && std::all_of(is.degrees.begin(), is.degrees.end(), [&](int v) { return v == r0; });
    if (!gorenstein) fail(ErrorKind::PreconditionFailed, "projective mode needs a Gorenstein vanishing ideal");
  }

  if (gamma1.size() + gamma2.size() != m)
    throw ConditionFailure(2, "|G1| + |G2| = " + str(static_cast<long long>(gamma1.size() + gamma2.size())) +
                                  " != " + str(static_cast<long long>(m)));
  if (d < 0) d = std::max(0, r0 - k);
  if (k < 0) k = std::max(0, r0 - d);
  if (projective_mode ? d + k > r0 : d + k != r0)
    throw ConditionFailure(1, "d + k = " + str(d + k) + (projective_mode ? " > " : " != ") + "r0 = " + str(r0));

  const FieldPtr& field = x.field();
  for (const auto& u1 : gamma1)
    for (const auto& u2 : gamma2)
      if (normal_form(Poly::term(field, u1 * u2), g).coeff(te) != 0)
        throw ConditionFailure(3, te.to_string() + " appears in the remainder of " + (u1 * u2).to_string());

  const Field& f = *field;
  LocalDualityVerdict verdict{d, k, {}};
  for (std::size_t i = 0; i < m; ++i) verdict.gamma.push_back(f.div(is.fs[i].coeff(te), is.values[i]));
  const LinearCode lhs = scale_code(LinearCode(field, m, evaluation_matrix(x, gamma1)), verdict.gamma);
  const LinearCode rhs = dual_code(LinearCode(field, m, evaluation_matrix(x, gamma2)));
  trap(lhs == rhs, "local duality conditions hold but gamma * ev_d(K G1) != ev_k(K G2)^perp");
  return verdict;
}

bool self_orthogonal(const ProjectivePointSet& x, const GroebnerBasis& g, int d) {
  bool by_sums = true;
  if (d >= 0) {
    const Matrix ev = evaluation_matrix(x, standard_monomials(g, 2 * d));
    const std::vector<Elem> ones(x.size(), 1);
    for (std::size_t r = 0; r < ev.rows() && by_sums; ++r) by_sums = dot(*x.field(), ev.row(r), ones) == 0;
  }
  const LinearCode c = code_of_degree(x, g, d);
  trap(by_sums == c.is_subcode_of(dual_code(c)), "self-orthogonality test disagrees with the code inclusion");
  return by_sums;
}

bool self_dual(const ProjectivePointSet& x, const GroebnerBasis& g, int d) {
  const LinearCode c = code_of_degree(x, g, d);
  const bool by_sums = self_orthogonal(x, g, d) && x.size() == 2 * c.dimension();
  trap(by_sums == (c == dual_code(c)), "self-duality test disagrees with the code equality");
  return by_sums;
}

std::vector<SelfDualRow> gorenstein_selfdual_classify(const ProjectivePointSet& x, const GroebnerBasis& g,
                                                      const HilbertData& hd, const ArtinianClassification& cls) {
  if (!cls.data.gorenstein) fail(ErrorKind::NotGorenstein, "self-duality classification needs a Gorenstein ideal");
  const int r0 = hd.r0;
  const std::size_t m = x.size();
  const int s = x.nvars();
  const Field& f = *x.field();
  std::vector<SelfDualRow> rows;
  for (int d = 1; d <= r0; ++d) {
    SelfDualRow row;
    row.d = d;
    row.monomially_self_dual = r0 == 2 * d + 1;
    const LinearCode c = code_of_degree(x, g, d);
    if (row.monomially_self_dual) {
      const auto beta = parity_check_vector(x, g, hd);
      trap(monomially_equivalent(c, dual_code(c), std::span<const Elem>(beta)),
           "r0 = 2d + 1 but C_X(d)^perp != beta * C_X(d)");
    }
    row.self_dual = row.monomially_self_dual && self_orthogonal(x, g, d);
    trap(row.self_dual == self_dual(x, g, d), "Gorenstein self-duality test disagrees with the direct test");
    if (row.self_dual && x.last_coordinates_one())
      trap(static_cast<long long>(m % f.p()) == 0, "self-dual code with m not divisible by the characteristic");
    if (d == 1 && x.last_coordinates_one() && hd.at(1) == s) {
      bool orthogonal = true;
      for (int i = 0; i < s && orthogonal; ++i)
        for (int j = i; j < s && orthogonal; ++j) {
          Elem acc = 0;
          for (const auto& p : x.points()) acc = f.add(acc, f.mul(p[i], p[j]));
          orthogonal = acc == 0;
        }
      row.column_criterion = m == static_cast<std::size_t>(2 * s) && orthogonal;
      trap(*row.column_criterion == row.self_dual, "point-matrix column criterion disagrees with self-duality");
    }
    rows.push_back(row);
  }
  return rows;
}

AffineDuality affine_duality(const FieldPtr& field, int n, const std::vector<Point>& affine, const TermOrder& order) {
  if (order.nvars() != n + 1) fail(ErrorKind::DimensionMismatch, "order must have one more variable than the affine space");
  ProjectivePointSet y = projective_closure(field, n, affine);
  GroebnerBasis g = vanishing_ideal(y, order);
  HilbertData hd = hilbert_data(g, static_cast<long long>(y.size()));
  const IndicatorSet is = standard_indicators(y, g);
  DualityCertificate cert = global_duality(y, g, hd, is);
  return {std::move(y), std::move(g), std::move(hd), std::move(cert)};
}

}  // namespace rmcode
