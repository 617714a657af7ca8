#include "qfcodes/matrix.hpp"

#include <utility>

namespace qfc {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vec> columns) {
  if (columns.empty()) return {};
  Matrix m(columns[0].size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Matrix multiply(const FieldContext& F, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
    }
  }
  return c;
}

Vec multiply(const FieldContext& F, const Matrix& a, std::span<const Elem> x) {
  Vec y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = F.add(acc, F.mul(a(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Elem dot(const FieldContext& F, std::span<const Elem> x, std::span<const Elem> y) {
  Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = F.add(acc, F.mul(x[i], y[i]));
  return acc;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(const FieldContext& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    const Elem scale = F.inv(a(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = F.mul(a(row, j), scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Elem factor = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(i, j) = F.sub(a(i, j), F.mul(factor, a(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FieldContext& F, Matrix a) { return row_reduce(F, a).size(); }

std::vector<Vec> nullspace(const FieldContext& F, Matrix a) {
  const auto pivots = row_reduce(F, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(a(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const FieldContext& F, const Matrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) return std::nullopt;
  if (n == 0) return Matrix{};
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

}  // namespace qfc
