#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmcode/groebner.hpp"
#include "rmcode/linalg.hpp"

namespace rmcode {

using Point = std::vector<Elem>;

/// Scales p so that its last nonzero coordinate is 1. Throws ZeroPoint.
Point canonical_representative(const Field& f, std::span<const Elem> p);

/// Distinct points of P^{s-1}(F_q), m >= 2, kept in input order.
class ProjectivePointSet {
 public:
  /// Validates the points (ZeroPoint, DuplicatePoint, TooFewPoints). With
  /// `canonicalize` each point is replaced by its canonical representative;
  /// without it the given representatives are kept as they are.
  ProjectivePointSet(FieldPtr field, int nvars, std::vector<Point> points, bool canonicalize = true);

  const FieldPtr& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  bool is_canonical() const noexcept { return canonical_; }

  ProjectivePointSet canonical() const;
  /// Point i multiplied by lambdas[i] (all nonzero).
  ProjectivePointSet rescaled(std::span<const Elem> lambdas) const;
  /// Same points with every coordinate mapped through an embedding.
  ProjectivePointSet lifted(const FieldEmbedding& emb) const;
  /// True when every point has last coordinate 1.
  bool last_coordinates_one() const;

 private:
  FieldPtr field_;
  int nvars_;
  std::vector<Point> points_;
  bool canonical_;
};

/// All q^{s-1} + ... + q + 1 points of P^{s-1}, ordered by canonical representative.
ProjectivePointSet full_projective(const FieldPtr& field, int s);
/// The projective torus: points with all coordinates nonzero.
ProjectivePointSet projective_torus(const FieldPtr& field, int s);
/// Points [y^{v_1} : ... : y^{v_s}] for y in (K^*)^n; exponents may be negative.
ProjectivePointSet parameterized_points(const FieldPtr& field, const std::vector<std::vector<int>>& exponents);
/// Y = [X, 1] for distinct affine points X in K^n.
ProjectivePointSet projective_closure(const FieldPtr& field, int n, const std::vector<Point>& affine);
/// Every point of K^n, in lexicographic order.
std::vector<Point> affine_space(const Field& field, int n);

/// Contents of a points file before validation.
struct PointsFile {
  FieldPtr field;
  int nvars = 0;
  std::optional<TermOrder> order;
  std::vector<Point> coords;
};

/// Parses the points file format. Throws ParseError with line and column.
PointsFile parse_points_file(std::string_view text);
std::string format_points_file(const ProjectivePointSet& x, const std::optional<TermOrder>& order = std::nullopt);

Elem monomial_value(const Field& f, const Monomial& u, std::span<const Elem> point);
/// Rows are the evaluation vectors of the given monomials at the points.
Matrix evaluation_matrix(const ProjectivePointSet& x, std::span<const Monomial> monos);
std::vector<Elem> evaluate(const Poly& f, const ProjectivePointSet& x);

/// Reduced, certified Groebner basis of I(X) by degree-by-degree interpolation.
GroebnerBasis vanishing_ideal(const ProjectivePointSet& x, const TermOrder& order);

struct HilbertData {
  std::vector<long long> H;  // H(0..r0)
  std::vector<long long> h;  // h_0..h_r0
  int r0 = 0;
  long long degree = 0;
  int a_invariant = 0;
  bool symmetric = false;

  /// H(d) for any integer d (0 below zero, m from r0 on).
  long long at(int d) const;
};

HilbertData hilbert_data(const GroebnerBasis& g, long long m);

/// h-vector symmetry, checked against H(d) + H(r0-d-1) = m. Throws
/// InternalInconsistency when the two disagree.
bool symmetry_equiv_check(const HilbertData& hd);

}  // namespace rmcode
