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

#ifndef CERING_ALGEBRA_HPP
#define CERING_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cering/residue.hpp"
#include "cering/subspace.hpp"

namespace cering {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1u << 20;

/// One structure constant: b_i * b_j += c * b_k.
struct MulTerm {
  int i, j, k;
  Scalar c;
};

struct RingMulTerm {
  int i, j, k;
  Int t;
};

/// A defect found by validate(); never thrown.
struct Violation {
  std::string kind;  // "associativity", "identity", "well-defined"
  std::array<int, 3> where{-1, -1, -1};
  std::string detail;
};

class Algebra;
class FiniteRing;

/// Element of an Algebra. Borrows its parent: the Algebra must outlive it.
class Element {
 public:
  Element(const Algebra* parent, ScalarVec coords)
      : parent_(parent), coords_(std::move(coords)) {}
  const Algebra& parent() const { return *parent_; }
  const Algebra* parent_ptr() const { return parent_; }
  const ScalarVec& coords() const { return coords_; }
  bool is_zero() const { return cering::is_zero(coords_); }
  bool operator==(const Element& o) const {
    return parent_ == o.parent_ && coords_ == o.coords_;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  const Algebra* parent_;
  ScalarVec coords_;
};

/// Element of a FiniteRing; coordinates are residues mod the generator
/// moduli. Borrows its parent.
class RingElement {
 public:
  RingElement(const FiniteRing* parent, IntVec coords)
      : parent_(parent), coords_(std::move(coords)) {}
  const FiniteRing& parent() const { return *parent_; }
  const FiniteRing* parent_ptr() const { return parent_; }
  const IntVec& coords() const { return coords_; }
  bool is_zero() const {
    for (const Int& c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool operator==(const RingElement& o) const {
    return parent_ == o.parent_ && coords_ == o.coords_;
  }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

 private:
  const FiniteRing* parent_;
  IntVec coords_;
};

/// Finite-dimensional associative unital algebra over Q or F_p, presented by
/// structure constants b_i b_j = sum_k c_{ijk} b_k and the coordinates of 1.
class Algebra {
 public:
  Algebra(FieldSpec field, std::vector<std::string> basis_names,
          std::vector<MulTerm> table, ScalarVec one);

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const ScalarVec& one_coords() const { return one_; }
  /// Sparse products, canonical order (k ascending, zero terms dropped).
  const std::vector<std::pair<int, Scalar>>& product_terms(int i, int j) const;
  /// The table as a canonical sorted list of nonzero terms.
  std::vector<MulTerm> table() const;

  ScalarVec mul_coords(const ScalarVec& x, const ScalarVec& y) const;

  Element element(ScalarVec coords) const;
  Element zero_element() const;
  Element one_element() const;
  Element basis_element(int i) const;

  /// Associativity on all basis triples, identity law on all basis
  /// elements; defects returned as records, never exceptions.
  std::vector<Violation> validate() const;

  bool operator==(const Algebra& o) const;
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  FieldSpec field_;
  int dim_;
  std::vector<std::string> names_;
  ScalarVec one_;
  std::vector<std::vector<std::pair<int, Scalar>>> products_;  // dim*dim
};

Element mul(const Element& a, const Element& b);
Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element neg(const Element& a);
Element scalar_mul(const Scalar& c, const Element& a);
/// ab - ba.
Element commutator(const Element& a, const Element& b);

bool is_commutative(const Algebra& a);

/// Matrix of left multiplication by x in the fixed convention
/// M[i][j] = coefficient of b_j in x * b_i; when b_0 = 1 the first row is x
/// itself. Under this convention M(x*y) = M(y) * M(x).
Matrix regular_representation(const Algebra& a, const Element& x);

/// Smallest subspace containing s and closed under right multiplication by
/// every basis element.
Subspace right_ideal_closure(const Algebra& a, const Subspace& s);
Subspace left_ideal_closure(const Algebra& a, const Subspace& s);

/// Re-express the algebra in the basis whose rows are p (invertible).
Algebra change_basis(const Algebra& a, const Matrix& p);

/// Quotient by a two-sided ideal given as a subspace; coset representatives
/// are the non-pivot coordinates of the ideal basis.
struct QuotientAlgebra {
  Algebra algebra;
  Subspace ideal;
  std::vector<int> rep_cols;  // old coordinate indices of the representatives
  ScalarVec project(const ScalarVec& x) const;
};
QuotientAlgebra quotient_by_ideal(const Algebra& a, const Subspace& ideal);

/// Finite unital ring on additive group (+) Z/m_i with integer structure
/// constants g_i g_j = sum_k t_{ijk} g_k.
class FiniteRing {
 public:
  FiniteRing(IntVec moduli, std::vector<std::string> names,
             std::vector<RingMulTerm> table, IntVec one);

  const IntVec& moduli() const { return moduli_; }
  int generator_count() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const IntVec& one_coords() const { return one_; }
  const std::vector<std::pair<int, Int>>& product_terms(int i, int j) const;
  std::vector<RingMulTerm> table() const;

  Int ring_order() const;

  IntVec mul_coords(const IntVec& x, const IntVec& y) const;
  IntVec reduce_coords(IntVec x) const;

  RingElement element(IntVec coords) const;
  RingElement zero_element() const;
  RingElement one_element() const;
  RingElement generator(int i) const;

  std::vector<Violation> validate() const;

  bool operator==(const FiniteRing& o) const;
  bool operator!=(const FiniteRing& o) const { return !(*this == o); }

 private:
  IntVec moduli_;
  int n_;
  std::vector<std::string> names_;
  IntVec one_;
  std::vector<std::vector<std::pair<int, Int>>> products_;
};

RingElement mul(const RingElement& a, const RingElement& b);
RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement commutator(const RingElement& a, const RingElement& b);

bool is_commutative(const FiniteRing& r);

/// Thrown when an exhaustive operation would need to visit more elements
/// than the configured bound allows.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(std::string what, Int required)
      : std::runtime_error(std::move(what)), required_(std::move(required)) {}
  const Int& required() const { return required_; }

 private:
  Int required_;
};

/// Element at a lexicographic position (first coordinate most significant).
IntVec element_by_index(const FiniteRing& r, std::uint64_t index);
std::uint64_t index_of_element(const FiniteRing& r, const IntVec& coords);

/// Visit every ring element exactly once in lexicographic coordinate order.
/// Throws BoundExceeded when the ring order exceeds `bound`. The [from, to)
/// index form supports partitioning across workers.
void for_each_element(const FiniteRing& r, std::uint64_t bound,
                      const std::function<void(const IntVec&)>& fn);
void for_each_element_in_range(const FiniteRing& r, std::uint64_t from,
                               std::uint64_t to,
                               const std::function<void(const IntVec&)>& fn);

/// View an F_p-algebra as a finite ring of order p^dim.
FiniteRing as_finite_ring(const Algebra& a);
/// Inverse view: a finite ring all of whose moduli equal one prime p.
Algebra as_fp_algebra(const FiniteRing& r);

}  // namespace cering

#endif  // CERING_ALGEBRA_HPP
