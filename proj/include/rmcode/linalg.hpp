#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rmcode/gf.hpp"

namespace rmcode {

/// Dense row-major matrix of raw field codes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values);
  Matrix transposed() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Rref {
  Matrix matrix;                    // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row-echelon form; zero rows are dropped.
Rref rref(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);

/// Basis of {x : m x = 0} as rows, in reduced row-echelon form.
Matrix nullspace(const Field& f, const Matrix& m);

/// Some x with a x = b, or nullopt when inconsistent.
std::optional<std::vector<Elem>> solve(const Field& f, const Matrix& a, std::span<const Elem> b);

Elem dot(const Field& f, std::span<const Elem> x, std::span<const Elem> y);

/// y <- y + c x
void axpy(const Field& f, Elem c, std::span<const Elem> x, std::span<Elem> y);

}  // namespace rmcode
