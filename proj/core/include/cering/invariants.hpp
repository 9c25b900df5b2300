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

#ifndef CERING_INVARIANTS_HPP
#define CERING_INVARIANTS_HPP

#include <string>

#include "cering/algebra.hpp"

namespace cering {

enum class Tri { yes, no, unknown };
std::string tri_str(Tri t);

/// Raised when a radical computation cannot be certified. The post-checks
/// (nilpotency of the returned basis, ideal closure, vanishing radical of
/// the quotient) re-verify every answer, so this is the honest failure mode
/// rather than a wrong basis.
class RadicalUndecided : public std::runtime_error {
 public:
  explicit RadicalUndecided(const std::string& what)
      : std::runtime_error(what) {}
};

/// Center as the kernel of the stacked commutator maps x -> x b_i - b_i x.
Subspace center(const Algebra& a);
ResidueModule center(const FiniteRing& r);

/// Jacobson radical.
///  - characteristic 0: kernel of the trace form (x, y) -> Tr(L_{xy});
///  - prime field F_p: the iterated p-power trace chain
///    A_{i} = { x in A_{i-1} : Tr(lift(xy)^{p^i}) / p^i = 0 mod p for all y },
///    run for p^l <= dim < p^{l+1} levels;
///  - finite ring: per prime p of the additive order, J is the preimage of
///    the radical of the F_p block R_p / p R_p.
/// Every result is re-verified (nilpotent two-sided ideal, zero radical of
/// the quotient); failures raise RadicalUndecided.
Subspace radical(const Algebra& a);
ResidueModule radical(const FiniteRing& r);

/// { x : x v = 0 for every basis vector v of s }.
Subspace left_annihilator(const Algebra& a, const Subspace& s);
ResidueModule left_annihilator(const FiniteRing& r, const ResidueModule& s);

/// Right socle = left annihilator of the radical.
Subspace socle_right(const Algebra& a, const Subspace& radical);
ResidueModule socle_right(const FiniteRing& r, const ResidueModule& radical);

/// Socle of the ring as a module over its center: the annihilator of
/// J(C) = C intersect J(R).
Subspace socle_central(const Algebra& a, const Subspace& center,
                       const Subspace& radical);
ResidueModule socle_central(const FiniteRing& r, const ResidueModule& center,
                            const ResidueModule& radical);

/// All basis-pair commutators lie in the radical.
bool quotient_commutative(const Algebra& a, const Subspace& radical);
bool quotient_commutative(const FiniteRing& r, const ResidueModule& radical);

/// Does x^(dim+1) vanish?
bool is_nilpotent_element(const Algebra& a, const ScalarVec& x);
bool is_nilpotent_element(const FiniteRing& r, const IntVec& x);

/// R/J(R) a division ring? yes / no / unknown; "no" always carries an
/// exhibited zero divisor or failed unit internally.
Tri is_local(const Algebra& a, const Subspace& radical,
             std::uint64_t scan_bound = kDefaultEnumerationBound);
Tri is_local(const FiniteRing& r, const ResidueModule& radical,
             std::uint64_t scan_bound = kDefaultEnumerationBound);

struct AlgebraInvariants {
  Subspace center, radical, center_radical, socle_right, socle_central;
  bool quotient_commutative = false;
  bool semiprime = false;
  Tri local = Tri::unknown;
};

struct RingInvariants {
  ResidueModule center, radical, center_radical, socle_right, socle_central;
  bool quotient_commutative = false;
  bool semiprime = false;
  Tri local = Tri::unknown;
};

AlgebraInvariants compute_invariants(const Algebra& a,
                                     std::uint64_t scan_bound = kDefaultEnumerationBound);
RingInvariants compute_invariants(const FiniteRing& r,
                                  std::uint64_t scan_bound = kDefaultEnumerationBound);

}  // namespace cering

#endif  // CERING_INVARIANTS_HPP
