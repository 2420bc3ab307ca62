#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cellalg/field.hpp"

namespace cellalg {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Vector apply(const Vector& v) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of the right null space {v : m v = 0}.
std::vector<Vector> kernel(const Matrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

Scalar determinant(Matrix m);

/// Coefficients c_0..c_{k-1} with vectors[k] = sum c_i vectors[i] for the
/// first k at which vectors[k] depends on its predecessors; nullopt if the
/// whole sequence is independent.
std::optional<Vector> first_dependency(const FieldSpec& field, const std::vector<Vector>& vectors);

bool is_zero_vector(const Vector& v);

}  // namespace cellalg
