#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmcode/gf.hpp"

namespace rmcode {

/// Exponent vector of t^c = t_1^{c_1} ... t_s^{c_s}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const noexcept { return static_cast<int>(exps_.size()); }
  int degree() const noexcept { return degree_; }
  int operator[](int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; the caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  std::vector<int> support() const;

  /// "1", "t1^2*t3"
  std::string to_string(std::span<const std::string> names = {}) const;

  // Canonical container order (lexicographic on exponents); not a term order.
  auto operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// All monomials of total degree d in `nvars` variables, canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

enum class OrderKind { GRevLex, GLex };

/// Graded monomial order. perm[0] is the largest variable, so the order on
/// variables is t_{perm[0]} > t_{perm[1]} > ... (0-based indices).
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::vector<int> perm);
  static TermOrder grevlex(int nvars);
  static TermOrder glex(int nvars);
  /// "grevlex", "glex", optionally followed by " perm=3,2,1" (1-based).
  static TermOrder parse(std::string_view text, int nvars);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<int>& perm() const noexcept { return perm_; }
  int nvars() const noexcept { return static_cast<int>(perm_.size()); }
  /// Index of the smallest variable.
  int last_variable() const { return perm_.back(); }
  bool is_identity_perm() const;

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }

  std::string describe() const;
  bool operator==(const TermOrder&) const = default;

 private:
  OrderKind kind_;
  std::vector<int> perm_;
};

/// Sparse polynomial over F_q with no stored zero coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Elem>;

  Poly(FieldPtr field, int nvars);
  static Poly constant(FieldPtr field, int nvars, Elem c);
  static Poly term(FieldPtr field, const Monomial& m, Elem c = 1);
  static Poly variable(FieldPtr field, int nvars, int index);

  const FieldPtr& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Elem coeff(const Monomial& m) const;
  void add_term(const Monomial& m, Elem c);

  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator*(const Poly& g) const;
  Poly scaled(Elem c) const;
  Poly times(const Monomial& m, Elem c = 1) const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  std::pair<Monomial, Elem> leading_term(const TermOrder& order) const;
  Monomial leading_monomial(const TermOrder& order) const { return leading_term(order).first; }
  Elem leading_coeff(const TermOrder& order) const { return leading_term(order).second; }
  Poly monic(const TermOrder& order) const;

  /// Terms in descending order.
  std::vector<std::pair<Monomial, Elem>> sorted_terms(const TermOrder& order) const;

  Elem eval(std::span<const Elem> point) const;

  /// "t1*t3-t1*t4"; terms in descending order.
  std::string to_string(const TermOrder& order, std::span<const std::string> names = {}) const;

  bool operator==(const Poly& g) const;

 private:
  void check_ring(const Poly& g) const;

  FieldPtr field_;
  int nvars_;
  Terms terms_;
};

std::vector<std::string> default_var_names(int nvars);

/// Parses `±c*t1^e1*...*ts^es` terms joined by '+'/'-'. Coefficients are
/// integers, `a`-powers, or parenthesised element literals. Throws ParseError.
Poly parse_poly(const FieldPtr& field, int nvars, std::string_view text,
                std::span<const std::string> names = {});

/// Appends the homogenising variable u as the last variable.
Poly homogenize(const Poly& f);
/// Sets the last variable to 1.
Poly dehomogenize(const Poly& f);

/// Scalar c with g = c f, when one exists (both nonzero).
std::optional<Elem> proportionality(const Poly& f, const Poly& g);

}  // namespace rmcode
