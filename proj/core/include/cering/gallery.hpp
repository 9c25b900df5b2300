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

#ifndef CERING_GALLERY_HPP
#define CERING_GALLERY_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cering/algebra.hpp"

namespace cering {

/// A finite group as a Cayley table.
struct FiniteGroupTable {
  int order = 0;
  int identity = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[i][j] = index of g_i g_j

  std::vector<Violation> validate() const;
};

/// The quaternion group {1, -1, i, -i, j, -j, k, -k}.
FiniteGroupTable quaternion_group();
FiniteGroupTable cyclic_group(int n);

/// Group algebra F[G]: basis indexed by group elements, products from the
/// Cayley table.
Algebra group_algebra(const FiniteGroupTable& g, const FieldSpec& field);

/// Exterior algebra on n generators: dimension 2^n, basis ordered by degree
/// and, within a degree, lexicographically -- except that for n = 3 the
/// degree-2 monomials are ordered e12, e23, e13 (the order the 8x8 left
/// multiplication matrix is pinned to).
Algebra grassmann(int n, const FieldSpec& field);

enum class Rank3Kind { K, R, S, T };

/// The four subalgebras of upper triangular 3x3 rational matrices with
/// constant diagonal: K = <1, E13>, R = <1, E12, E13>,
/// S(k) = <1, E12 + k E23, E13>, T = <1, E12, E13, E23>.
Algebra rank3_algebra(Rank3Kind kind, const Rational& k = Rational(1));

/// (+) Z_{p^k} summands.
struct FiniteAbelianGroup {
  struct Summand {
    Int p;
    int k = 1;
  };
  std::vector<Summand> summands;

  Int order() const;
  bool all_components_cyclic() const;  // every prime appears at most once
  std::string str() const;             // "Z4+Z9"
};

/// Parse "p:k,p:k,..." (e.g. "2:1,2:2" for Z2+Z4).
FiniteAbelianGroup parse_group_spec(const std::string& spec);

/// Endomorphism ring of a finite abelian group, on the hom-group generators
/// h_ij : summand j -> summand i (same prime), h_ij(x_j) = p^max(ki-kj,0) x_i,
/// with the p-power composition factors. Throws BoundExceeded when the group
/// order exceeds `group_order_bound`.
FiniteRing endomorphism_ring(const FiniteAbelianGroup& a,
                             std::uint64_t group_order_bound = kDefaultEnumerationBound);

/// Index of the generator h_ij in the ring built by endomorphism_ring; -1
/// when the summand primes differ.
int endomorphism_generator_index(const FiniteAbelianGroup& a, int i, int j);

/// All isomorphism types of abelian groups of order 2..max_order.
std::vector<FiniteAbelianGroup> abelian_groups_up_to(long max_order);

/// Exact integer polynomials in two variables.
class IntPoly2 {
 public:
  IntPoly2() = default;
  explicit IntPoly2(Int constant);
  static IntPoly2 monomial(int deg_x, int deg_y, Int coeff);
  static IntPoly2 var_x() { return monomial(1, 0, 1); }
  static IntPoly2 var_y() { return monomial(0, 1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  const std::map<std::pair<int, int>, Int>& coeffs() const { return coeffs_; }

  IntPoly2 operator+(const IntPoly2& o) const;
  IntPoly2 operator-(const IntPoly2& o) const;
  IntPoly2 operator*(const IntPoly2& o) const;
  IntPoly2 dx() const;
  IntPoly2 dy() const;
  bool operator==(const IntPoly2& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPoly2& o) const { return !(*this == o); }
  std::string str() const;

 private:
  void prune();
  std::map<std::pair<int, int>, Int> coeffs_;  // (deg_x, deg_y) -> coeff
};

/// Element of the derivation ring: the upper triangular 3x3 matrix with
/// diagonal f, corner g, and the two partial derivatives of f implied on the
/// remaining entries.
struct DerivationRingElement {
  IntPoly2 f;  // diagonal
  IntPoly2 g;  // upper-right corner

  bool is_zero() const { return f.is_zero() && g.is_zero(); }
  bool operator==(const DerivationRingElement& o) const {
    return f == o.f && g == o.g;
  }
};

DerivationRingElement derivation_ring_mul(const DerivationRingElement& a,
                                          const DerivationRingElement& b);
DerivationRingElement derivation_ring_add(const DerivationRingElement& a,
                                          const DerivationRingElement& b);
DerivationRingElement derivation_ring_sub(const DerivationRingElement& a,
                                          const DerivationRingElement& b);
/// The corner matrix unit (f = 0, g = 1).
DerivationRingElement derivation_ring_e13();

struct DerivationSampleReport {
  int trials = 0;
  int failures = 0;
  std::uint64_t seed = 0;
  bool pass() const { return failures == 0 && trials > 0; }
};

/// Sampled verification that multiplying by the corner unit lands in the
/// center: for random elements with nonzero diagonal, a * e13 must be
/// central and nonzero; elements with zero diagonal must themselves be
/// central. Centrality is checked against a probe panel (the coordinate
/// polynomials and fresh random elements), not assumed.
DerivationSampleReport derivation_ring_ce_sample(int trials, int deg_bound,
                                                 int coeff_bound,
                                                 std::uint64_t seed);

/// A named ring for gallery-wide sweeps.
struct GalleryInstance {
  std::string name;
  std::variant<Algebra, FiniteRing> ring;

  bool is_algebra() const { return std::holds_alternative<Algebra>(ring); }
  const Algebra& algebra() const { return std::get<Algebra>(ring); }
  const FiniteRing& finite_ring() const { return std::get<FiniteRing>(ring); }
};

/// The fixed list of concrete rings used by the verification sweeps.
std::vector<GalleryInstance> standard_instances();

}  // namespace cering

#endif  // CERING_GALLERY_HPP
