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

#ifndef CERING_SUBSPACE_HPP
#define CERING_SUBSPACE_HPP

#include <vector>

#include "cering/matrix.hpp"

namespace cering {

/// A linear subspace of F^ambient in canonical form: the basis matrix is in
/// reduced row echelon form with no zero rows, so two subspaces are equal
/// exactly when their representations compare equal. The zero subspace is an
/// empty basis with an explicit ambient dimension.
class Subspace {
 public:
  Subspace(FieldSpec field, int ambient_dim, Matrix rref_basis);

  static Subspace zero(const FieldSpec& f, int ambient_dim);
  static Subspace full(const FieldSpec& f, int ambient_dim);
  /// Canonicalize the row space of arbitrary spanning rows.
  static Subspace span(const FieldSpec& f, int ambient_dim,
                       const std::vector<ScalarVec>& rows);

  const FieldSpec& field() const { return field_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  ScalarVec basis_row(int i) const { return basis_.row(i); }
  bool is_zero() const { return dim() == 0; }

  /// Residual of v after eliminating against the basis; zero iff v lies in
  /// the subspace.
  ScalarVec reduce(ScalarVec v) const;
  bool contains_vector(const ScalarVec& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  FieldSpec field_;
  int ambient_;
  Matrix basis_;
};

/// Canonical form of the row space of `vectors` (the exactlin echelonize
/// operation). Rejects mixed-field rows.
Subspace echelonize(const Matrix& vectors);

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// True iff span(v) is contained in span(u).
bool contains(const Subspace& u, const Subspace& v);

}  // namespace cering

#endif  // CERING_SUBSPACE_HPP
