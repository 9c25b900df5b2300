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

#ifndef CERING_CE_HPP
#define CERING_CE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cering/gallery.hpp"
#include "cering/invariants.hpp"

namespace cering {

enum class CEDecision { yes, no, undecided };
std::string ce_decision_str(CEDecision d);

enum class CEMethod { none, subspace, exhaustive, both };
std::string ce_method_str(CEMethod m);

/// The four structural flags of a local Artinian ring that relate to central
/// essentiality: commutativity of R/J, equality of the two socles,
/// containment of the central socle in the center (the decision criterion),
/// and whether every minimal right ideal meets the center.
struct LocalRingCriteria {
  Tri quotient_commutative = Tri::unknown;
  Tri socles_equal = Tri::unknown;
  Tri socle_in_center = Tri::unknown;
  Tri min_ideals_meet_center = Tri::unknown;
  std::string note;
};

struct ModuleSummary {
  int rows = 0;             // dimension (field case) or Howell basis rows
  std::string order;        // element count, finite case only
};

struct InvariantSummary {
  bool finite = false;
  int ambient = 0;          // algebra dimension / generator count
  std::string ring_order;   // finite case only
  ModuleSummary center, radical, center_radical, socle_right, socle_central;
  bool commutative = false;
  bool quotient_commutative = false;
  bool semiprime = false;
  Tri local = Tri::unknown;
};

InvariantSummary summarize(const Algebra& a, const AlgebraInvariants& inv);
InvariantSummary summarize(const FiniteRing& r, const RingInvariants& inv);

struct CEReport {
  CEDecision decision = CEDecision::undecided;
  CEMethod method = CEMethod::none;
  std::optional<std::vector<std::string>> witness_failure;  // exact coordinates
  LocalRingCriteria criteria;
  InvariantSummary invariants;
  std::string undecided_reason;
};

/// Decision by the subspace criterion: R is centrally essential exactly when
/// the socle of R as a C-module lies inside C. (Every nonzero C-submodule of
/// an Artinian module contains a simple one, so C is essential iff it
/// swallows the whole socle.) Undecided only if the radical cannot be
/// certified.
CEReport is_ce_subspace(const Algebra& a,
                        std::uint64_t scan_bound = kDefaultEnumerationBound);
CEReport is_ce_subspace(const FiniteRing& r,
                        std::uint64_t scan_bound = kDefaultEnumerationBound);

/// Decision straight from the definition: for every nonzero a there must be
/// a central x with a x central and nonzero. Enumerates the whole ring
/// (lexicographic coordinate order); the witness on failure is the first
/// failing element in that order. Undecided when the ring order exceeds
/// `bound`.
CEReport is_ce_exhaustive(const FiniteRing& r,
                          std::uint64_t bound = kDefaultEnumerationBound,
                          int jobs = 1);

/// Central x, y with a x = y != 0, if they exist (a * C meets C
/// nontrivially). Central a returns (1, a). Throws on a = 0.
std::optional<std::pair<Element, Element>> ce_witness(const Algebra& a,
                                                      const Element& x);
std::optional<std::pair<RingElement, RingElement>> ce_witness(
    const FiniteRing& r, const RingElement& x);

/// The local-ring criteria evaluation: requires invariants of a ring that is
/// certified local, evaluates the four flags and cross-checks them against
/// the subspace decision (necessity of (i) and (iii); sufficiency of
/// (i)+(ii)+(iii)). Precondition violations throw std::invalid_argument.
LocalRingCriteria local_ring_criteria(const Algebra& a,
                                      const AlgebraInvariants& inv);
LocalRingCriteria local_ring_criteria(const FiniteRing& r,
                                      const RingInvariants& inv);

struct ReportOptions {
  std::uint64_t bound = kDefaultEnumerationBound;
  int jobs = 1;
};

/// Full report: subspace decision plus, when the ring is finite and within
/// bound, the exhaustive decision. The two must agree; disagreement throws
/// std::logic_error.
CEReport ce_report(const Algebra& a, const ReportOptions& opt = {});
CEReport ce_report(const FiniteRing& r, const ReportOptions& opt = {});

/// Direct-sum test for endomorphism rings: End(+A_i) is centrally essential
/// iff every summand is fully invariant (all cross homs vanish) and every
/// End(A_i) is centrally essential. Cross-checked against the decision on
/// the assembled endomorphism ring.
struct DecompositionReport {
  bool fully_invariant = false;
  bool components_ce = false;
  bool verdict = false;
  CEDecision direct = CEDecision::undecided;
  bool consistent = false;
};
DecompositionReport decomposition_ce_check(const FiniteAbelianGroup& g,
                                           const ReportOptions& opt = {});

}  // namespace cering

#endif  // CERING_CE_HPP
