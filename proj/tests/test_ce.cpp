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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cering/ce.hpp"
#include "support/oracles.hpp"
#include "support/random_helpers.hpp"

using namespace cering;
using cering::testing::Rng;

namespace {

const FieldSpec Q = FieldSpec::rationals();

int name_index(const Algebra& a, const std::string& name) {
  for (int i = 0; i < a.dim(); ++i)
    if (a.basis_names()[i] == name) return i;
  return -1;
}

Element unit(const Algebra& a, const std::string& name) {
  return a.basis_element(name_index(a, name));
}

ScalarVec parse_coords(const Algebra& a, const std::vector<std::string>& s) {
  ScalarVec v;
  for (const std::string& c : s) v.push_back(Scalar::parse(a.field(), c));
  return v;
}

}  // namespace

TEST_CASE("T is not centrally essential; its witness is sound") {
  Algebra t = rank3_algebra(Rank3Kind::T);
  CEReport rep = is_ce_subspace(t);
  CHECK(rep.decision == CEDecision::no);
  CHECK(rep.criteria.quotient_commutative == Tri::yes);
  CHECK(rep.criteria.min_ideals_meet_center == Tri::no);
  CHECK(rep.criteria.socle_in_center == Tri::no);
  REQUIRE(rep.witness_failure.has_value());

  // the witness a satisfies aC intersect C = 0
  ScalarVec a = parse_coords(t, *rep.witness_failure);
  Subspace c = center(t);
  std::vector<ScalarVec> images;
  for (int i = 0; i < c.dim(); ++i)
    images.push_back(t.mul_coords(a, c.basis_row(i)));
  CHECK(intersect(Subspace::span(Q, 4, images), c).is_zero());
  CHECK(!ce_witness(t, t.element(a)).has_value());
}

TEST_CASE("the minimal right ideal of T avoids the center") {
  Algebra t = rank3_algebra(Rank3Kind::T);
  ScalarVec e23 = unit(t, "e23").coords();
  Subspace m = Subspace::span(Q, 4, {e23});
  CHECK(right_ideal_closure(t, m) == m);  // m is a right ideal; dim 1 = minimal
  CHECK(intersect(center(t), m).is_zero());
  // and e23 has no witness pair
  CHECK(!ce_witness(t, t.element(e23)).has_value());
}

TEST_CASE("exterior algebra parity over Q, n = 1..5") {
  for (int n = 1; n <= 5; ++n) {
    CEReport rep = is_ce_subspace(grassmann(n, Q));
    CHECK(rep.decision == (n % 2 ? CEDecision::yes : CEDecision::no));
    CHECK(rep.method == CEMethod::subspace);
  }
}

TEST_CASE("exterior algebra over F3: subspace and exhaustive paths agree") {
  FieldSpec f3 = FieldSpec::prime_field(3);
  for (int n = 1; n <= 4; ++n) {
    CEReport sub = is_ce_subspace(grassmann(n, f3));
    CHECK(sub.decision == (n % 2 ? CEDecision::yes : CEDecision::no));
    if (n <= 3) {
      CEReport ex = is_ce_exhaustive(as_finite_ring(grassmann(n, f3)));
      CHECK(ex.decision == sub.decision);
      CEReport both = ce_report(grassmann(n, f3));
      CHECK(both.method == CEMethod::both);
      CHECK(both.decision == sub.decision);
    }
  }
}

TEST_CASE("the 256-element group ring is centrally essential both ways") {
  FieldSpec f2 = FieldSpec::prime_field(2);
  Algebra a = group_algebra(quaternion_group(), f2);
  CEReport rep = ce_report(a);
  CHECK(rep.decision == CEDecision::yes);
  CHECK(rep.method == CEMethod::both);
  CHECK(rep.invariants.local == Tri::yes);
  CHECK(!rep.invariants.commutative);
  CHECK(rep.criteria.quotient_commutative == Tri::yes);
  CHECK(rep.criteria.min_ideals_meet_center == Tri::yes);

  AlgebraInvariants inv = compute_invariants(a);
  LocalRingCriteria crit = local_ring_criteria(a, inv);
  CHECK(crit.socle_in_center == Tri::yes);
}

TEST_CASE("Mat2(F2): brute force finds a witness and both paths agree") {
  FiniteRing m2 = endomorphism_ring(parse_group_spec("2:1,2:1"));
  CEReport ex = is_ce_exhaustive(m2);
  CHECK(ex.decision == CEDecision::no);
  REQUIRE(ex.witness_failure.has_value());
  // first nonzero element in enumeration order fails already
  CHECK(*ex.witness_failure == std::vector<std::string>{"0", "0", "0", "1"});
  CEReport sub = is_ce_subspace(m2);
  CHECK(sub.decision == CEDecision::no);

  // oracle agreement with the independent implementation
  auto naive = cering::testing::naive_ce_witness(m2);
  REQUIRE(naive.has_value());
  std::vector<std::string> ns;
  for (const Int& c : *naive) ns.push_back(c.str());
  CHECK(ns == *ex.witness_failure);
}

TEST_CASE("Z/4 is centrally essential (commutative)") {
  FiniteRing z4 = endomorphism_ring(parse_group_spec("2:2"));
  CEReport rep = ce_report(z4);
  CHECK(rep.decision == CEDecision::yes);
  CHECK(rep.method == CEMethod::both);
}

TEST_CASE("ce_witness: stated examples") {
  Algebra g3 = grassmann(3, Q);
  // central a -> (one, a)
  Element a = unit(g3, "e12");
  auto w = ce_witness(g3, a);
  REQUIRE(w.has_value());
  CHECK(w->first == g3.one_element());
  CHECK(w->second == a);

  // a = e1 -> x = e23, y = e123
  auto w2 = ce_witness(g3, unit(g3, "e1"));
  REQUIRE(w2.has_value());
  CHECK(w2->first == unit(g3, "e23"));
  CHECK(w2->second == unit(g3, "e123"));
  CHECK(mul(unit(g3, "e1"), w2->first) == w2->second);

  CHECK_THROWS_AS(ce_witness(g3, g3.zero_element()), std::invalid_argument);
}

TEST_CASE("witness soundness on centrally essential rings") {
  Rng rng(2026);
  Algebra g3 = grassmann(3, Q);
  Subspace c = center(g3);
  for (int t = 0; t < 1000; ++t) {
    ScalarVec coords = rng.vector(Q, 8);
    if (cering::is_zero(coords)) continue;
    auto w = ce_witness(g3, g3.element(coords));
    REQUIRE(w.has_value());
    CHECK(c.contains_vector(w->first.coords()));
    CHECK(c.contains_vector(w->second.coords()));
    CHECK(!w->second.is_zero());
    CHECK(mul(g3.element(coords), w->first) == w->second);
  }

  // finite case: F2[Q8]
  FiniteRing r = as_finite_ring(group_algebra(quaternion_group(),
                                              FieldSpec::prime_field(2)));
  ResidueModule rc = center(r);
  for (int t = 0; t < 200; ++t) {
    IntVec coords;
    for (int i = 0; i < 8; ++i) coords.push_back(Int(rng.uniform(0, 1)));
    bool zero = std::all_of(coords.begin(), coords.end(),
                            [](const Int& c) { return c == 0; });
    if (zero) continue;
    auto w = ce_witness(r, r.element(coords));
    REQUIRE(w.has_value());
    CHECK(rc.contains_vector(w->first.coords()));
    CHECK(rc.contains_vector(w->second.coords()));
    CHECK(!w->second.is_zero());
    CHECK(mul(r.element(coords), w->first) == w->second);
  }
}

TEST_CASE("semiprime noncommutative rings are never centrally essential") {
  for (const GalleryInstance& inst : standard_instances()) {
    CAPTURE(inst.name);
    CEReport rep = inst.is_algebra() ? is_ce_subspace(inst.algebra())
                                     : is_ce_subspace(inst.finite_ring());
    bool semiprime = rep.invariants.semiprime;
    bool comm = rep.invariants.commutative;
    if (semiprime && !comm) CHECK(rep.decision == CEDecision::no);
    if (comm) CHECK(rep.decision == CEDecision::yes);
  }
}

TEST_CASE("oracle agreement across the small prime-field gallery") {
  for (const GalleryInstance& inst : standard_instances()) {
    CAPTURE(inst.name);
    FiniteRing const* r = nullptr;
    std::optional<FiniteRing> converted;
    if (inst.is_algebra()) {
      if (!inst.algebra().field().is_prime_field()) continue;
      converted = as_finite_ring(inst.algebra());
      r = &*converted;
    } else {
      r = &inst.finite_ring();
    }
    if (r->ring_order() > 65536) continue;
    CEReport sub = is_ce_subspace(*r);
    CEReport ex = is_ce_exhaustive(*r);
    REQUIRE(sub.decision != CEDecision::undecided);
    CHECK(sub.decision == ex.decision);

    // third, fully independent implementation on the tiny ones
    if (r->ring_order() <= 512) {
      auto naive = cering::testing::naive_ce_witness(*r);
      CHECK((ex.decision == CEDecision::yes) == !naive.has_value());
      if (naive && ex.witness_failure) {
        std::vector<std::string> ns;
        for (const Int& c : *naive) ns.push_back(c.str());
        CHECK(ns == *ex.witness_failure);
      }
    }
  }
}

TEST_CASE("decision is invariant under change of basis") {
  Rng rng(606);
  std::vector<std::pair<Algebra, CEDecision>> cases = {
      {grassmann(3, Q), CEDecision::yes},
      {grassmann(2, Q), CEDecision::no},
      {rank3_algebra(Rank3Kind::T), CEDecision::no},
      {rank3_algebra(Rank3Kind::S, Rational(7) / Rational(3)), CEDecision::yes},
  };
  for (auto& [a, expect] : cases) {
    for (int t = 0; t < 5; ++t) {
      Algebra b = change_basis(a, rng.invertible(Q, a.dim()));
      CHECK(is_ce_subspace(b).decision == expect);
    }
  }
}

TEST_CASE("local criteria: necessity and the not-necessary direction") {
  // T: (i) holds, (iii) fails, not CE
  Algebra t = rank3_algebra(Rank3Kind::T);
  AlgebraInvariants tinv = compute_invariants(t);
  LocalRingCriteria tc = local_ring_criteria(t, tinv);
  CHECK(tc.quotient_commutative == Tri::yes);
  CHECK(tc.min_ideals_meet_center == Tri::no);
  CHECK(tc.socle_in_center == Tri::no);

  // the exterior algebra: CE with socles unequal, so equality of socles is
  // not necessary for central essentiality
  Algebra g3 = grassmann(3, Q);
  AlgebraInvariants ginv = compute_invariants(g3);
  LocalRingCriteria gc = local_ring_criteria(g3, ginv);
  CHECK(gc.socle_in_center == Tri::yes);
  CHECK(gc.socles_equal == Tri::no);
  CHECK(gc.quotient_commutative == Tri::yes);
  CHECK(gc.min_ideals_meet_center == Tri::yes);

  //

  // non-local input is a precondition error
  FiniteRing m2 = endomorphism_ring(parse_group_spec("2:1,2:1"));
  RingInvariants m2inv = compute_invariants(m2);
  CHECK_THROWS_AS(local_ring_criteria(m2, m2inv), std::invalid_argument);
}

TEST_CASE("decomposition test for endomorphism rings") {
  // coprime cyclic summands: fully invariant, CE
  DecompositionReport d1 = decomposition_ce_check(parse_group_spec("2:2,3:2"));
  CHECK(d1.fully_invariant);
  CHECK(d1.components_ce);
  CHECK(d1.verdict);
  CHECK(d1.direct == CEDecision::yes);
  CHECK(d1.consistent);

  // Hom(Z2, Z4) != 0: not fully invariant, not CE
  DecompositionReport d2 = decomposition_ce_check(parse_group_spec("2:1,2:2"));
  CHECK(!d2.fully_invariant);
  CHECK(d2.components_ce);
  CHECK(!d2.verdict);
  CHECK(d2.direct == CEDecision::no);
  CHECK(d2.consistent);

  // Z2 + Z2: matches the Mat2(F2) brute force
  DecompositionReport d3 = decomposition_ce_check(parse_group_spec("2:1,2:1"));
  CHECK(!d3.verdict);
  CHECK(d3.direct == CEDecision::no);
  CHECK(d3.consistent);
}

TEST_CASE("exhaustive scan: bound refusal and parallel determinism") {
  FiniteRing big = endomorphism_ring(parse_group_spec("2:1,2:1,2:1,2:1,2:1"));
  CHECK(big.ring_order() == Int(1) << 25);
  CEReport rep = is_ce_exhaustive(big);  // beyond the default bound
  CHECK(rep.decision == CEDecision::undecided);
  CHECK(rep.undecided_reason.find("33554432") != std::string::npos);
  // the subspace criterion still decides it
  CHECK(is_ce_subspace(big).decision == CEDecision::no);

  FiniteRing g3 = as_finite_ring(grassmann(3, FieldSpec::prime_field(3)));
  CEReport one_job = is_ce_exhaustive(g3, kDefaultEnumerationBound, 1);
  CEReport four_jobs = is_ce_exhaustive(g3, kDefaultEnumerationBound, 4);
  CHECK(one_job.decision == four_jobs.decision);
  FiniteRing m2 = endomorphism_ring(parse_group_spec("2:1,2:1"));
  CEReport a = is_ce_exhaustive(m2, 1 << 20, 1);
  CEReport b = is_ce_exhaustive(m2, 1 << 20, 4);
  REQUIRE(a.witness_failure.has_value());
  REQUIRE(b.witness_failure.has_value());
  CHECK(*a.witness_failure == *b.witness_failure);
}
