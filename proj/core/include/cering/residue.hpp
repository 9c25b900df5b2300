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

#ifndef CERING_RESIDUE_HPP
#define CERING_RESIDUE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "cering/scalars.hpp"

namespace cering {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// Howell normal form of a set of row vectors over Z/L. Canonical: two
/// generating sets with the same row span produce identical forms. Pivot
/// entries divide L, pivot columns strictly increase, entries above a pivot d
/// are reduced into [0, d), and for every span element supported on columns
/// >= c the rows with pivot >= c already generate it (the Howell property,
/// maintained by annihilator closure).
struct HowellForm {
  Int modulus;
  int cols = 0;
  IntMat rows;
  std::vector<int> pivot_cols;
  IntVec pivot_vals;
};

HowellForm howell_mod(IntMat rows, const Int& modulus, int cols);

/// Reduce v against a Howell form; returns the residual. v is in the span
/// exactly when the residual is zero.
IntVec howell_reduce(const HowellForm& h, IntVec v);

/// A submodule of Z/m1 x ... x Z/mk given by a canonical basis. Internally
/// the module is embedded into (Z/L)^k, L = lcm(m_i), by scaling coordinate
/// i with L/m_i; the Howell form is computed there and decoded back, so the
/// stored basis has entries reduced mod the column moduli and is canonical
/// for the submodule.
class ResidueModule {
 public:
  /// Canonical form of the span of `gens` (entries taken mod the moduli).
  static ResidueModule howell(const IntMat& gens, const IntVec& moduli);
  static ResidueModule zero(const IntVec& moduli);
  static ResidueModule full(const IntVec& moduli);

  const IntVec& moduli() const { return moduli_; }
  int ambient() const { return static_cast<int>(moduli_.size()); }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const IntMat& rows() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }

  /// Number of elements of the submodule.
  Int element_count() const;

  bool contains_vector(const IntVec& v) const;
  /// Membership residual in decoded coordinates (zero iff member).
  IntVec reduce(const IntVec& v) const;

  /// All elements, as decoded coordinate vectors, if there are at most
  /// `limit` of them; nullopt otherwise. Deterministic order.
  std::optional<IntMat> elements(std::uint64_t limit) const;

  bool operator==(const ResidueModule& o) const {
    return moduli_ == o.moduli_ && rows_ == o.rows_;
  }
  bool operator!=(const ResidueModule& o) const { return !(*this == o); }

 private:
  ResidueModule(IntVec moduli, IntMat rows, HowellForm scaled);

  IntVec moduli_;
  IntMat rows_;      // decoded canonical basis
  HowellForm scaled_;  // basis in the (Z/L)^k embedding
  Int lcm_ = 1;
  IntVec scale_;  // scale_[j] = L / moduli[j]

  friend ResidueModule intersect(const ResidueModule&, const ResidueModule&);
  friend ResidueModule module_sum(const ResidueModule&, const ResidueModule&);
  friend bool contains(const ResidueModule&, const ResidueModule&);
};

ResidueModule intersect(const ResidueModule& u, const ResidueModule& v);
ResidueModule module_sum(const ResidueModule& u, const ResidueModule& v);
bool contains(const ResidueModule& u, const ResidueModule& v);

/// Kernel of the additive map x -> x * F from (+) Z/src_moduli to
/// (+) Z/dst_moduli, where row j of F lists images of the j-th source
/// generator. The map must be well defined (src_moduli[j] * F[j][k] = 0 mod
/// dst_moduli[k]); violations are rejected.
ResidueModule kernel_mod(const IntMat& f, const IntVec& src_moduli,
                         const IntVec& dst_moduli);

/// One solution x of x * F = b, or nullopt. Deterministic.
std::optional<IntVec> solve_mod(const IntMat& f, const IntVec& src_moduli,
                                const IntVec& dst_moduli, const IntVec& b);

}  // namespace cering

#endif  // CERING_RESIDUE_HPP
