#include "rmcode/linalg.hpp"

#include "rmcode/error.hpp"

namespace rmcode {

void Matrix::append_row(std::span<const Elem> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) fail(ErrorKind::DimensionMismatch, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Elem dot(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) fail(ErrorKind::DimensionMismatch, "dot product length mismatch");
  Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

void axpy(const Field& f, Elem c, std::span<const Elem> x, std::span<Elem> y) {
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(c, x[i]));
}

Rref rref(const Field& f, Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m.at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    const Elem inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      axpy(f, f.neg(m.at(i, c)), m.row(r), m.row(i));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).pivots.size(); }

Matrix nullspace(const Field& f, const Matrix& m) {
  const std::size_t n = m.cols();
  const Rref red = rref(f, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  Matrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = f.neg(red.matrix.at(i, free));
    basis.append_row(v);
  }
  if (basis.rows() == 0) return Matrix(0, n);
  return rref(f, std::move(basis)).matrix;
}

std::optional<std::vector<Elem>> solve(const Field& f, const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) fail(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  const Rref red = rref(f, std::move(aug));
  std::vector<Elem> x(n, 0);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] == n) return std::nullopt;
    x[red.pivots[i]] = red.matrix.at(i, n);
  }
  return x;
}

}  // namespace rmcode
