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

#ifndef CERING_MATRIX_HPP
#define CERING_MATRIX_HPP

#include <optional>
#include <vector>

#include "cering/scalars.hpp"

namespace cering {

using ScalarVec = std::vector<Scalar>;

/// Dense matrix of exact scalars, all entries over one field.
class Matrix {
 public:
  Matrix(FieldSpec field, int rows, int cols);
  static Matrix identity(const FieldSpec& f, int n);
  static Matrix from_rows(const FieldSpec& f,
                          const std::vector<ScalarVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  ScalarVec row(int i) const;
  void set_row(int i, const ScalarVec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  FieldSpec field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivot_cols;
  int rank;
};

/// Gauss–Jordan reduced row echelon form; exact, deterministic.
RrefResult rref(Matrix m);

/// One exact solution of A x = b (x, b column vectors given as flat
/// vectors), or nullopt if the system is inconsistent. Free variables are
/// set to zero, so the result is deterministic.
std::optional<ScalarVec> solve_linear(const Matrix& a, const ScalarVec& b);

/// Canonical basis of { x : A x = 0 }, one kernel vector per row of the
/// returned matrix (standard free-column construction from the RREF).
Matrix right_kernel(const Matrix& a);

/// Canonical basis of { x : x A = 0 } as rows.
Matrix left_kernel(const Matrix& a);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

ScalarVec zero_vector(const FieldSpec& f, int n);
ScalarVec add(const ScalarVec& a, const ScalarVec& b);
ScalarVec sub(const ScalarVec& a, const ScalarVec& b);
ScalarVec scale(const Scalar& c, const ScalarVec& v);
bool is_zero(const ScalarVec& v);

/// Row vector times matrix.
ScalarVec mul_row(const ScalarVec& x, const Matrix& a);

}  // namespace cering

#endif  // CERING_MATRIX_HPP
