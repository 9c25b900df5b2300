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

#ifndef CERING_TESTS_RANDOM_HELPERS_HPP
#define CERING_TESTS_RANDOM_HELPERS_HPP

#include <random>
#include <vector>

#include "cering/matrix.hpp"
#include "cering/residue.hpp"
#include "cering/subspace.hpp"

namespace cering::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  Scalar scalar(const FieldSpec& f, int max_abs = 5) {
    if (f.is_rationals()) return Scalar(f, Rational(uniform(-max_abs, max_abs)));
    return Scalar::of_int(f, uniform(0, 1000));
  }

  Scalar nonzero_scalar(const FieldSpec& f, int max_abs = 5) {
    for (;;) {
      Scalar s = scalar(f, max_abs);
      if (!s.is_zero()) return s;
    }
  }

  ScalarVec vector(const FieldSpec& f, int n, int max_abs = 5) {
    ScalarVec v;
    for (int i = 0; i < n; ++i) v.push_back(scalar(f, max_abs));
    return v;
  }

  Matrix matrix(const FieldSpec& f, int rows, int cols, int max_abs = 5) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = scalar(f, max_abs);
    return m;
  }

  /// Random invertible matrix: unit lower triangular * unit upper
  /// triangular * row permutation.
  Matrix invertible(const FieldSpec& f, int n, int max_abs = 3) {
    Matrix lo = Matrix::identity(f, n), up = Matrix::identity(f, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        lo.at(i, j) = scalar(f, max_abs);
        up.at(j, i) = scalar(f, max_abs);
      }
    Matrix prod = lo * up;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), eng_);
    Matrix out(f, n, n);
    for (int i = 0; i < n; ++i) out.set_row(i, prod.row(perm[i]));
    return out;
  }

  Subspace subspace(const FieldSpec& f, int ambient, int gen_rows) {
    return echelonize(matrix(f, gen_rows, ambient));
  }

  IntVec int_vector(const IntVec& moduli) {
    IntVec v;
    for (const Int& m : moduli)
      v.push_back(Int(uniform(0, 1000)) % m);
    return v;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cering::testing

#endif  // CERING_TESTS_RANDOM_HELPERS_HPP
