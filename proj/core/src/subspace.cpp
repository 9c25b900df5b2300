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

#include "cering/subspace.hpp"

#include <stdexcept>

namespace cering {

namespace {

Matrix drop_zero_rows(const RrefResult& r) {
  Matrix out(r.reduced.field(), r.rank, r.reduced.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < r.reduced.cols(); ++j) out.at(i, j) = r.reduced.at(i, j);
  return out;
}

}  // namespace

Subspace::Subspace(FieldSpec field, int ambient_dim, Matrix rref_basis)
    : field_(std::move(field)), ambient_(ambient_dim), basis_(std::move(rref_basis)) {
  if (basis_.cols() != ambient_)
    throw std::invalid_argument("Subspace: basis width != ambient dimension");
}

Subspace Subspace::zero(const FieldSpec& f, int ambient_dim) {
  return Subspace(f, ambient_dim, Matrix(f, 0, ambient_dim));
}

Subspace Subspace::full(const FieldSpec& f, int ambient_dim) {
  return Subspace(f, ambient_dim, Matrix::identity(f, ambient_dim));
}

Subspace Subspace::span(const FieldSpec& f, int ambient_dim,
                        const std::vector<ScalarVec>& rows) {
  if (rows.empty()) return zero(f, ambient_dim);
  Matrix m = Matrix::from_rows(f, rows);
  if (m.cols() != ambient_dim)
    throw std::invalid_argument("Subspace::span: row width != ambient");
  return echelonize(m);
}

ScalarVec Subspace::reduce(ScalarVec v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace::reduce: wrong vector length");
  for (int i = 0; i < basis_.rows(); ++i) {
    // pivot column of row i = first nonzero column; pivot entry is 1
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    if (v[pc].is_zero()) continue;
    Scalar c = v[pc];
    for (int j = pc; j < ambient_; ++j) v[j] = v[j] - c * basis_.at(i, j);
  }
  return v;
}

bool Subspace::contains_vector(const ScalarVec& v) const {
  return cering::is_zero(reduce(v));
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace echelonize(const Matrix& vectors) {
  RrefResult r = rref(vectors);
  return Subspace(vectors.field(), vectors.cols(), drop_zero_rows(r));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.field() != v.field() || u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("intersect: ambient/field mismatch");
  const FieldSpec& f = u.field();
  const int n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(f, n);
  // Zassenhaus: rows [U | U] and [V | 0]; echelon rows with zero left half
  // have right halves spanning the intersection.
  Matrix big(f, u.dim() + v.dim(), 2 * n);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      big.at(i, j) = u.basis().at(i, j);
      big.at(i, n + j) = u.basis().at(i, j);
    }
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < n; ++j) big.at(u.dim() + i, j) = v.basis().at(i, j);
  RrefResult r = rref(std::move(big));
  std::vector<ScalarVec> rows;
  for (int i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (!r.reduced.at(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    ScalarVec right;
    right.reserve(n);
    for (int j = 0; j < n; ++j) right.push_back(r.reduced.at(i, n + j));
    rows.push_back(std::move(right));
  }
  return Subspace::span(f, n, rows);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.field() != v.field() || u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient/field mismatch");
  std::vector<ScalarVec> rows;
  for (int i = 0; i < u.dim(); ++i) rows.push_back(u.basis_row(i));
  for (int i = 0; i < v.dim(); ++i) rows.push_back(v.basis_row(i));
  return Subspace::span(u.field(), u.ambient_dim(), rows);
}

bool contains(const Subspace& u, const Subspace& v) {
  if (u.field() != v.field() || u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("contains: ambient/field mismatch");
  for (int i = 0; i < v.dim(); ++i)
    if (!u.contains_vector(v.basis_row(i))) return false;
  return true;
}

}  // namespace cering
