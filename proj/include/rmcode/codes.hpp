#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmcode/indicators.hpp"
#include "rmcode/linalg.hpp"

namespace rmcode {

/// Linear code over F_q kept as an RREF basis, so equality is matrix equality.
class LinearCode {
 public:
  LinearCode(FieldPtr field, std::size_t length, const Matrix& rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }

  bool contains(std::span<const Elem> word) const;
  bool is_subcode_of(const LinearCode& other) const;
  bool operator==(const LinearCode& other) const;

 private:
  FieldPtr field_;
  std::size_t length_;
  Matrix basis_;
};

/// C_X(d): span of the evaluation vectors of the degree-d standard monomials.
LinearCode code_of_degree(const ProjectivePointSet& x, const GroebnerBasis& g, int d);
LinearCode dual_code(const LinearCode& c);
/// beta * C, coordinatewise.
LinearCode scale_code(const LinearCode& c, std::span<const Elem> beta);

struct Budgets {
  std::uint64_t codewords = 10'000'000;  // projective codewords for min_distance
  std::uint64_t subspaces = 1'000'000;   // r-subspaces for ghw, r-subsets for footprint

  static Budgets uniform(std::uint64_t n) { return {n, n}; }
  /// Defaults, overridden by RMCODE_BUDGET when it holds a positive integer.
  static Budgets from_env();
};

/// [k choose r]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int k, int r, std::uint64_t q);

/// Minimum Hamming weight over one representative per scalar class. When
/// (q^k - 1)/(q - 1) > limit, falls back to the smallest dependent set of
/// parity-check columns; throws BudgetExceeded when that search needs more
/// than `limit` column subsets too.
long long min_distance(const LinearCode& c, std::uint64_t limit = Budgets{}.codewords);

/// r-th generalized Hamming weight by enumerating RREF r x k matrices.
/// Throws BudgetExceeded when [k choose r]_q > limit.
long long ghw(const LinearCode& c, int r, std::uint64_t limit = Budgets{}.subspaces);

/// Footprint bound fp_I(d, r): m minus the largest deg S/(in(I) + (F)) over
/// r-subsets F of the degree-d standard monomials with (in(I) : (F)) != in(I).
long long footprint(const GroebnerBasis& g, int d, int r, long long m,
                    std::uint64_t limit = Budgets{}.subspaces);

struct WeightCell {
  enum class Kind { Exact, Interval, Infinity };
  Kind kind = Kind::Interval;
  long long lo = 0;
  long long hi = 0;
  std::string source;  // enumeration | infinity | regularity-index | bounds

  bool exact() const noexcept { return kind == Kind::Exact; }
};

struct WeightMatrix {
  int r0 = 0;
  std::size_t m = 0;
  std::vector<std::vector<WeightCell>> cells;          // cells[d-1][r-1]
  std::vector<std::vector<std::optional<long long>>> fp;  // fp[d-1][r-1]; empty when r > H(d)

  const WeightCell& at(int d, int r) const { return cells.at(d - 1).at(r - 1); }
  bool fully_resolved() const;
};

/// Weight matrix for 1 <= d <= r0, 1 <= r <= m: enumeration within budget,
/// infinity for r > H(d), the regularity index pin, then bound propagation.
WeightMatrix weight_matrix(const ProjectivePointSet& x, const GroebnerBasis& g, const HilbertData& hd,
                           const IndicatorSet& is, const Budgets& budgets = {}, bool with_footprint = true);

/// Whether C2 = beta * C1. Without beta throws Unsupported.
bool monomially_equivalent(const LinearCode& c1, const LinearCode& c2,
                           std::optional<std::span<const Elem>> beta);

}  // namespace rmcode
