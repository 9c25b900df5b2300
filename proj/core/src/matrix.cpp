/*
   Copyright 2026 The cering authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cering/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cering {

Matrix::Matrix(FieldSpec field, int rows, int cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(field_)) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("Matrix: negative dimensions");
}

Matrix Matrix::identity(const FieldSpec& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f,
                         const std::vector<ScalarVec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j].field() != f)
        throw std::invalid_argument("Matrix::from_rows: mixed-field entries");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

ScalarVec Matrix::row(int i) const {
  ScalarVec v;
  v.reserve(cols_);
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

void Matrix::set_row(int i, const ScalarVec& v) {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Matrix::set_row: wrong length");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_ || cols_ != o.rows_)
    throw std::invalid_argument("Matrix::operator*: shape/field mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix::operator+: shape/field mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t t = 0; t < data_.size(); ++t) r.data_[t] = data_[t] + o.data_[t];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix::operator-: shape/field mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t t = 0; t < data_.size(); ++t) r.data_[t] = data_[t] - o.data_[t];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         data_ == o.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

RrefResult rref(Matrix m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    Scalar inv = m.at(rank, col).inverse();
    for (int j = col; j < cols; ++j) m.at(rank, j) = m.at(rank, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < cols; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(m), std::move(pivots), rank};
}

std::optional<ScalarVec> solve_linear(const Matrix& a, const ScalarVec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve_linear: dimension mismatch");
  const FieldSpec& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    if (b[i].field() != f)
      throw std::invalid_argument("solve_linear: mixed-field input");
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  ScalarVec x = zero_vector(f, a.cols());
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivot_cols[i] == a.cols()) return std::nullopt;  // 0 = 1 row
    x[r.pivot_cols[i]] = r.reduced.at(i, a.cols());
  }
  return x;
}

Matrix right_kernel(const Matrix& a) {
  RrefResult r = rref(a);
  const FieldSpec& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(f, static_cast<int>(free_cols.size()), a.cols());
  for (int t = 0; t < static_cast<int>(free_cols.size()); ++t) {
    int fc = free_cols[t];
    k.at(t, fc) = Scalar::one(f);
    for (int i = 0; i < r.rank; ++i)
      k.at(t, r.pivot_cols[i]) = -r.reduced.at(i, fc);
  }
  return k;
}

Matrix left_kernel(const Matrix& a) { return right_kernel(a.transpose()); }

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("inverse: matrix not square");
  const int n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Scalar::one(a.field());
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
  return inv;
}

ScalarVec zero_vector(const FieldSpec& f, int n) {
  return ScalarVec(static_cast<std::size_t>(n), Scalar::zero(f));
}

ScalarVec add(const ScalarVec& a, const ScalarVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  ScalarVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

ScalarVec sub(const ScalarVec& a, const ScalarVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  ScalarVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

ScalarVec scale(const Scalar& c, const ScalarVec& v) {
  ScalarVec r;
  r.reserve(v.size());
  for (const Scalar& s : v) r.push_back(c * s);
  return r;
}

bool is_zero(const ScalarVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

ScalarVec mul_row(const ScalarVec& x, const Matrix& a) {
  if (static_cast<int>(x.size()) != a.rows())
    throw std::invalid_argument("mul_row: dimension mismatch");
  ScalarVec r = zero_vector(a.field(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      r[j] = r[j] + x[i] * a.at(i, j);
    }
  }
  return r;
}

}  // namespace cering
