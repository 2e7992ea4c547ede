#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rmcode/poly.hpp"

namespace rmcode {

/// Monomial ideal kept by its minimal generators (sorted, pairwise non-divisible).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars, std::vector<Monomial> gens = {});

  int nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  bool contains(const Monomial& m) const;
  bool is_zero() const noexcept { return gens_.empty(); }

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  /// (L : t^m)
  MonomialIdeal colon(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

struct GroebnerBasis {
  TermOrder order;
  std::vector<Poly> gens;  // monic, sorted by ascending leading monomial
  bool certified = false;

  int nvars() const noexcept { return order.nvars(); }
  std::vector<Monomial> leading_monomials() const;
  MonomialIdeal initial_ideal() const;
};

/// Reduced Groebner basis of a homogeneous ideal. Throws NotHomogeneous.
GroebnerBasis buchberger(std::span<const Poly> gens, const TermOrder& order);

/// True iff every S-polynomial of G reduces to zero modulo G.
bool gb_certify(const GroebnerBasis& g);

/// Full remainder of f on division by G.
Poly normal_form(const Poly& f, const GroebnerBasis& g);

/// Degree-d monomials outside in(G), in descending order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g, int d);
std::vector<Monomial> standard_monomials(const MonomialIdeal& l, int d);

/// (dim S/L, deg S/L). Throws DimensionTooLarge when dim >= 2.
std::pair<int, long long> monomial_dim_degree(const MonomialIdeal& l);

/// (L : (F)) as the intersection of (L : f) over f in F.
MonomialIdeal monomial_colon(const MonomialIdeal& l, std::span<const Monomial> f);

/// Number of minimal homogeneous generators of (G), counted degree by degree
/// up to `max_degree` from the ranks of I_d and S_1 I_{d-1}.
int minimal_generator_count(const GroebnerBasis& g, int max_degree);

}  // namespace rmcode
