#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "rmcode/error.hpp"
#include "rmcode/groebner.hpp"
#include "rmcode/variety.hpp"

namespace testing {

inline std::vector<rmcode::Poly> polys(const rmcode::FieldPtr& f, int s, const std::vector<std::string>& texts) {
  std::vector<rmcode::Poly> out;
  for (const auto& t : texts) out.push_back(rmcode::parse_poly(f, s, t));
  return out;
}

inline rmcode::Point pt(const rmcode::Field& f, const std::vector<long long>& coords) {
  rmcode::Point p;
  for (auto c : coords) p.push_back(f.from_int(c));
  return p;
}

inline rmcode::ProjectivePointSet points(const rmcode::FieldPtr& f, const std::vector<std::vector<long long>>& rows,
                                         bool canonicalize = true) {
  std::vector<rmcode::Point> pts;
  for (const auto& r : rows) pts.push_back(pt(*f, r));
  return {f, static_cast<int>(rows.front().size()), std::move(pts), canonicalize};
}

template <class Fn>
rmcode::ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const rmcode::Error& e) {
    return e.kind();
  }
  FAIL("expected an rmcode::Error");
  return rmcode::ErrorKind::InternalInconsistency;
}

/// Reduced GB of the given generators; the comparison target for printed ideals.
inline rmcode::GroebnerBasis gb_of(const rmcode::FieldPtr& f, int s, const std::vector<std::string>& texts,
                                   const rmcode::TermOrder& order) {
  auto gens = polys(f, s, texts);
  return rmcode::buchberger(gens, order);
}

}  // namespace testing

#include <random>
#include <set>

namespace testing {

/// m distinct random points of P^{s-1}(F) in canonical form (m is capped by
/// the number of available points).
inline rmcode::ProjectivePointSet random_points(std::mt19937& rng, const rmcode::FieldPtr& f, int s, int m) {
  auto all = rmcode::full_projective(f, s).points();
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(std::max(m, 2))));
  return {f, s, all};
}

/// Random nonzero scalars, one per point.
inline std::vector<rmcode::Elem> random_units(std::mt19937& rng, const rmcode::Field& f, std::size_t n) {
  std::uniform_int_distribution<rmcode::Elem> d(1, f.q() - 1);
  std::vector<rmcode::Elem> out(n);
  for (auto& x : out) x = d(rng);
  return out;
}

}  // namespace testing

namespace testing {

inline rmcode::ProjectivePointSet hiram_points() {
  auto f3 = rmcode::Field::create(3);
  return points(f3, {{1, 0, 1}, {1, 0, 0}, {1, 0, 2}, {1, 1, 0}, {1, 1, 1},
                     {1, 1, 2}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
}

inline rmcode::ProjectivePointSet seven_points() {
  auto f3 = rmcode::Field::create(3);
  return points(f3, {{1, 0, 1}, {1, 1, 1}, {1, 1, 2}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
}

inline rmcode::ProjectivePointSet affine_plane_f3() {
  auto f3 = rmcode::Field::create(3);
  return rmcode::projective_closure(f3, 2, rmcode::affine_space(*f3, 2));
}

inline rmcode::ProjectivePointSet ci_four_points() {
  auto f3 = rmcode::Field::create(3);
  return points(f3, {{-1, -1, -1, 1}, {1, 1, 1, 1}, {0, 1, 1, 1}, {0, -1, -1, 1}});
}

inline rmcode::ProjectivePointSet five_points_nonci() {
  auto f3 = rmcode::Field::create(3);
  return points(f3, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}, {2, 2, 2, 1}});
}

inline rmcode::ProjectivePointSet gorenstein_five_points(bool canonicalize = true) {
  auto f3 = rmcode::Field::create(3);
  return points(f3, {{1, 0, -1, 1}, {1, 0, 1, 1}, {0, 1, -1, -1}, {0, 0, 1, -1}, {0, 1, 1, 1}}, canonicalize);
}

/// Six points of P^2 over F_4 whose degree-1 code is self-dual.
inline rmcode::ProjectivePointSet selfdual_six_points() {
  auto f4 = rmcode::Field::create(2, 2);
  const rmcode::Elem a = f4->parse("a"), a2 = f4->mul(a, a);
  std::vector<rmcode::Point> pts = {{1, 0, 1}, {a, 0, 1}, {a2, 0, 1}, {0, 1, 1}, {0, a2, 1}, {0, a, 1}};
  return {f4, 3, pts};
}

inline bool proportional(const rmcode::Poly& a, const rmcode::Poly& b) {
  return rmcode::proportionality(a, b).has_value();
}

inline std::vector<rmcode::Elem> vec(const rmcode::Field& f, const std::vector<long long>& v) { return pt(f, v); }

}  // namespace testing
