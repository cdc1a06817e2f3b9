#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hullforge/ffield.hpp"

namespace hullforge {

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data);

  static Matrix identity(FieldPtr field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element x) { data_[r * cols_ + c] = x; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Element>& data() const noexcept { return data_; }

  bool operator==(const Matrix& other) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the pivot in each column is the first nonzero
/// entry at or below the current row.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Nonzero rows of rref(m).
Matrix row_basis(const Matrix& m);

/// Basis B of the right kernel: m * B^T = 0, rank(B) = cols - rank(m).
Matrix null_space(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// Every entry raised to p^j.
Matrix entrywise_frobenius(const Matrix& m, unsigned j);
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Columns listed in `cols`, in that order.
Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols);

/// x * m for a row vector x.
std::vector<Element> vec_mat(std::span<const Element> x, const Matrix& m);

/// dim(rowspace(a) ∩ rowspace(b)) = rank(a) + rank(b) - rank([a; b]).
std::size_t intersection_dim(const Matrix& a, const Matrix& b);
/// Row-reduced basis of rowspace(a) ∩ rowspace(b), read off the left kernel
/// of the stacked bases.
Matrix intersection_basis(const Matrix& a, const Matrix& b);

void require_same_field(const Matrix& a, const Matrix& b);

}  // namespace hullforge
