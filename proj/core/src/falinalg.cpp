#include "hullforge/falinalg.hpp"

#include <utility>

namespace hullforge {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) fail(ErrorCode::ShapeMismatch, "matrix data length != rows * cols");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.field().one());
  return m;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && field_->compatible_with(*other.field_) &&
         data_ == other.data_;
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!a.field().compatible_with(b.field())) fail(ErrorCode::MixedFields, "matrices over different fields");
}

RowEchelon rref(const Matrix& m) {
  const Field& F = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r.at(sel, col).code == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row) {
      auto a = r.row(sel), b = r.row(row);
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(a[c], b[c]);
    }
    auto prow = r.row(row);
    const Element inv = F.inv(prow[col]);
    for (std::size_t c = col; c < r.cols(); ++c) prow[c] = F.mul(prow[c], inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      auto target = r.row(i);
      const Element factor = target[col];
      if (factor.code == 0) continue;
      const Element nf = F.neg(factor);
      for (std::size_t c = col; c < r.cols(); ++c) {
        if (prow[c].code != 0) target[c] = F.add(target[c], F.mul(nf, prow[c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RowEchelon{std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix row_basis(const Matrix& m) {
  RowEchelon ech = rref(m);
  std::vector<Element> data(ech.reduced.data().begin(),
                            ech.reduced.data().begin() + static_cast<std::ptrdiff_t>(ech.rank * m.cols()));
  return Matrix(m.field_ptr(), ech.rank, m.cols(), std::move(data));
}

Matrix null_space(const Matrix& m) {
  const Field& F = m.field();
  RowEchelon ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  Matrix basis(m.field_ptr(), m.cols() - ech.rank, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(out, free, F.one());
    for (std::size_t i = 0; i < ech.rank; ++i) basis.set(out, ech.pivots[i], F.neg(ech.reduced.at(i, free)));
    ++out;
  }
  return basis;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "matmul inner dimensions differ");
  const Field& F = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Element x = a.at(i, t);
      if (x.code == 0) continue;
      auto src = b.row(t);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] = F.add(dst[j], F.mul(x, src[j]));
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field_ptr(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, m.at(i, j));
  return out;
}

Matrix entrywise_frobenius(const Matrix& m, unsigned j) {
  const Field& F = m.field();
  std::vector<Element> data(m.data().size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = F.frobenius_power(m.data()[i], j);
  return Matrix(m.field_ptr(), m.rows(), m.cols(), std::move(data));
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom);
  if (top.cols() != bottom.cols()) fail(ErrorCode::ShapeMismatch, "vstack column counts differ");
  std::vector<Element> data = top.data();
  data.insert(data.end(), bottom.data().begin(), bottom.data().end());
  return Matrix(top.field_ptr(), top.rows() + bottom.rows(), top.cols(), std::move(data));
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
  Matrix out(m.field_ptr(), m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, m.at(i, cols[j]));
  return out;
}

std::vector<Element> vec_mat(std::span<const Element> x, const Matrix& m) {
  if (x.size() != m.rows()) fail(ErrorCode::ShapeMismatch, "vector length != matrix rows");
  const Field& F = m.field();
  std::vector<Element> out(m.cols());
  for (std::size_t t = 0; t < m.rows(); ++t) {
    if (x[t].code == 0) continue;
    auto src = m.row(t);
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = F.add(out[j], F.mul(x[t], src[j]));
  }
  return out;
}

std::size_t intersection_dim(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "intersection of spaces of different length");
  return rank(a) + rank(b) - rank(vstack(a, b));
}

Matrix intersection_basis(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "intersection of spaces of different length");
  const Matrix ba = row_basis(a);
  const Matrix bb = row_basis(b);
  // (x, y) with x*ba + y*bb = 0  <=>  (x, y) in the right kernel of [ba; bb]^T.
  const Matrix kernel = null_space(transpose(vstack(ba, bb)));
  Matrix coeffs(a.field_ptr(), kernel.rows(), ba.rows());
  for (std::size_t i = 0; i < kernel.rows(); ++i)
    for (std::size_t j = 0; j < ba.rows(); ++j) coeffs.set(i, j, kernel.at(i, j));
  return row_basis(matmul(coeffs, ba));
}

}  // namespace hullforge
