#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rmcode {

// Raw element code of F_{p^k}: the base-p number whose i-th digit is the
// coefficient of a^i. 0 and 1 are the field's zero and one. Kernels work on
// raw codes through a Field; FqElement is the checked value type.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field F_q, q = p^k, realised as F_p[a]/(modulus).
///
/// Immutable after construction. Multiplication goes through discrete
/// log tables built from the generator; addition uses a full table for
/// q <= 1024 and digit-wise arithmetic above that.
class Field {
 public:
  /// Builds F_{p^k}. When `modulus` (ascending coefficients, monic, length
  /// k+1) is omitted and k > 1 the built-in table is used.
  static FieldPtr create(int p, int k = 1, std::optional<std::vector<int>> modulus = std::nullopt);

  /// Built-in moduli (ascending coefficients) for q in {4,8,9,16,25,27,32,49,64,81}.
  static std::optional<std::vector<int>> builtin_modulus(int p, int k);

  int p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  Elem q() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  /// Smallest element code of multiplicative order q-1.
  Elem generator() const noexcept { return generator_; }

  Elem add(Elem x, Elem y) const noexcept {
    return add_table_.empty() ? add_slow(x, y) : add_table_[x * q_ + y];
  }
  Elem neg(Elem x) const noexcept { return neg_table_[x]; }
  Elem sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }
  Elem mul(Elem x, Elem y) const noexcept {
    if (x == 0 || y == 0) return 0;
    Elem s = log_[x] + log_[y];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const;
  /// Negative exponents are allowed for nonzero x.
  Elem pow(Elem x, long long e) const;

  /// Integer into the prime subfield (negative values allowed).
  Elem from_int(long long n) const noexcept;
  Elem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Elem x) const;

  /// Multiplicative order; 0 for the zero element.
  std::uint64_t order(Elem x) const;
  bool in_prime_subfield(Elem x) const noexcept { return x < static_cast<Elem>(p_); }

  /// Ascending powers of `a`: "0", "2", "a", "2+a", "1+2*a^2".
  std::string format(Elem x) const;
  /// Coefficient rendering for polynomials: symmetric representative for odd p
  /// in the prime subfield ("-1"), the plain literal otherwise.
  std::string format_signed(Elem x) const;
  /// Parses the element literal grammar. Prime fields accept signed integers;
  /// extensions accept sums of `c`, `a`, `a^e`, `c*a^e` (any e >= 0, and
  /// signed terms). Throws ParseError.
  Elem parse(std::string_view text) const;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }
  std::string describe() const;

 private:
  Field(int p, int k, std::vector<int> modulus);
  Elem add_slow(Elem x, Elem y) const noexcept;
  Elem mul_slow(Elem x, Elem y) const;

  int p_;
  int k_;
  Elem q_;
  std::vector<int> modulus_;
  Elem generator_ = 1;
  std::vector<Elem> exp_;
  std::vector<Elem> log_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_table_;
};

bool is_prime(long long n);

/// Irreducibility of a monic polynomial (ascending coefficients) over F_p,
/// via gcd(x^{p^i} - x, f) = 1 for i <= deg/2.
bool is_irreducible_mod_p(std::span<const int> monic, int p);

/// Embedding of a field into a degree-`e` extension of it.
struct FieldEmbedding {
  FieldPtr source;
  FieldPtr target;
  std::vector<Elem> image;  // image[code] for every source element

  Elem operator()(Elem x) const { return image.at(x); }
};

/// F_{q^e} together with an embedding of F_q. Uses the built-in modulus
/// when one exists for q^e, otherwise the first primitive monic polynomial.
FieldEmbedding extend_field(const FieldPtr& base, int e);

/// Checked field element: arithmetic between elements of different fields
/// throws FieldMismatch, division by zero throws DivisionByZero.
class FqElement {
 public:
  FqElement(FieldPtr field, Elem value);
  static FqElement from_int(FieldPtr field, long long n);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::vector<int> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FqElement operator+(const FqElement& y) const;
  FqElement operator-(const FqElement& y) const;
  FqElement operator*(const FqElement& y) const;
  FqElement operator/(const FqElement& y) const;
  FqElement operator-() const;
  FqElement inv() const;
  FqElement pow(long long e) const;

  bool operator==(const FqElement& y) const;
  std::string to_string() const { return field_->format(value_); }

 private:
  void check_same(const FqElement& y) const;

  FieldPtr field_;
  Elem value_;
};

/// Smallest element (by code) of multiplicative order q-1.
FqElement primitive_element(const FieldPtr& field);

}  // namespace rmcode
