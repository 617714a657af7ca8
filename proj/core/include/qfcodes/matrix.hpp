#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qfcodes/field.hpp"

namespace qfc {

using Vec = std::vector<Elem>;

/// Dense row-major matrix of field elements. Arithmetic lives in the free
/// functions below since it needs a FieldContext.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const Vec> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix transpose(const Matrix& a);
Matrix multiply(const FieldContext& F, const Matrix& a, const Matrix& b);
Vec multiply(const FieldContext& F, const Matrix& a, std::span<const Elem> x);

std::size_t rank(const FieldContext& F, Matrix a);

/// Basis of {x : A x = 0}.
std::vector<Vec> nullspace(const FieldContext& F, Matrix a);

std::optional<Matrix> inverse(const FieldContext& F, const Matrix& a);

Elem dot(const FieldContext& F, std::span<const Elem> x, std::span<const Elem> y);

}  // namespace qfc
