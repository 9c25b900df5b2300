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

#include "cering/algebra.hpp"
#include "cering/gallery.hpp"
#include "support/random_helpers.hpp"

using namespace cering;
using cering::testing::Rng;

namespace {

const FieldSpec Q = FieldSpec::rationals();

ScalarVec qv(std::initializer_list<long> xs) {
  ScalarVec v;
  for (long x : xs) v.push_back(Scalar::of_int(Q, x));
  return v;
}

int name_index(const Algebra& a, const std::string& name) {
  for (int i = 0; i < a.dim(); ++i)
    if (a.basis_names()[i] == name) return i;
  return -1;
}

Element unit(const Algebra& a, const std::string& name) {
  int i = name_index(a, name);
  REQUIRE(i >= 0);
  return a.basis_element(i);
}

}  // namespace

TEST_CASE("quaternion group table") {
  FiniteGroupTable q8 = quaternion_group();
  CHECK(q8.validate().empty());
  auto idx = [&](const std::string& n) {
    for (int i = 0; i < 8; ++i)
      if (q8.names[i] == n) return i;
    return -1;
  };
  CHECK(q8.table[idx("i")][idx("j")] == idx("k"));
  CHECK(q8.table[idx("j")][idx("i")] == idx("-k"));
  CHECK(q8.table[idx("i")][idx("i")] == idx("-1"));
  CHECK(q8.table[idx("j")][idx("j")] == idx("-1"));
  CHECK(q8.table[idx("k")][idx("k")] == idx("-1"));
  CHECK(q8.table[idx("j")][idx("k")] == idx("i"));
  CHECK(q8.table[idx("k")][idx("j")] == idx("-i"));
}

TEST_CASE("grassmann basis order and defining relations") {
  Algebra g3 = grassmann(3, Q);
  CHECK(g3.dim() == 8);
  std::vector<std::string> expect = {"1",   "e1",  "e2",  "e3",
                                     "e12", "e23", "e13", "e123"};
  CHECK(g3.basis_names() == expect);
  CHECK(g3.validate().empty());

  Element e1 = unit(g3, "e1"), e2 = unit(g3, "e2"), e3 = unit(g3, "e3");
  CHECK(mul(e1, e2) == unit(g3, "e12"));
  CHECK(mul(e2, e1) == neg(unit(g3, "e12")));
  CHECK(mul(mul(e1, e2), e3) == unit(g3, "e123"));
  CHECK(mul(e1, e1).is_zero());
  // commutator(e1, e2) = 2 e12
  CHECK(commutator(e1, e2) ==
        scalar_mul(Scalar::of_int(Q, 2), unit(g3, "e12")));
}

TEST_CASE("identity multiplies trivially on random elements") {
  Rng rng(11);
  Algebra g3 = grassmann(3, Q);
  for (int t = 0; t < 30; ++t) {
    Element a = g3.element(rng.vector(Q, 8));
    CHECK(mul(g3.one_element(), a) == a);
    CHECK(mul(a, g3.one_element()) == a);
    CHECK(commutator(a, a).is_zero());
  }
}

TEST_CASE("mul is bilinear on random elements") {
  Rng rng(12);
  Algebra t = rank3_algebra(Rank3Kind::T);
  for (int i = 0; i < 50; ++i) {
    Element a = t.element(rng.vector(Q, 4));
    Element b = t.element(rng.vector(Q, 4));
    Element c = t.element(rng.vector(Q, 4));
    CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
    CHECK(mul(c, add(a, b)) == add(mul(c, a), mul(c, b)));
  }
}

TEST_CASE("validate accepts gallery output and pinpoints planted defects") {
  for (const GalleryInstance& inst : standard_instances()) {
    if (inst.is_algebra())
      CHECK(inst.algebra().validate().empty());
    else
      CHECK(inst.finite_ring().validate().empty());
  }

  // Plant: modify a product so that (b1 b1) b2 != b1 (b1 b2).
  // Basis: 1, x, y with x*x = y (nilpotent chain); defect sets x*y = 1.
  std::vector<MulTerm> table = {
      {0, 0, 0, Scalar::one(Q)}, {0, 1, 1, Scalar::one(Q)},
      {1, 0, 1, Scalar::one(Q)}, {0, 2, 2, Scalar::one(Q)},
      {2, 0, 2, Scalar::one(Q)}, {1, 1, 2, Scalar::one(Q)},
      {1, 2, 0, Scalar::one(Q)},  // defect: x*y = 1 while y*x = 0
  };
  Algebra bad(Q, {"1", "x", "y"}, table, qv({1, 0, 0}));
  auto violations = bad.validate();
  REQUIRE(!violations.empty());
  bool found = false;
  for (const Violation& v : violations)
    if (v.kind == "associativity" && v.where == std::array<int, 3>{1, 1, 1})
      found = true;  // (x x) x = y x = 0 vs x (x x) = x y = 1
  CHECK(found);
}

TEST_CASE("regular representation matches the pinned 8x8 matrix") {
  Algebra g3 = grassmann(3, Q);
  CHECK(regular_representation(g3, g3.one_element()) == Matrix::identity(Q, 8));

  auto expected = [&](const ScalarVec& q) {
    auto s = [&](long v) { return Scalar::of_int(Q, v); };
    std::vector<ScalarVec> rows(8, zero_vector(Q, 8));
    rows[0] = q;
    rows[1] = {s(0), q[0], s(0), s(0), -q[2], s(0), -q[3], q[5]};
    rows[2] = {s(0), s(0), q[0], s(0), q[1], -q[3], s(0), -q[6]};
    rows[3] = {s(0), s(0), s(0), q[0], s(0), q[2], q[1], q[4]};
    rows[4] = {s(0), s(0), s(0), s(0), q[0], s(0), s(0), q[3]};
    rows[5] = {s(0), s(0), s(0), s(0), s(0), q[0], s(0), q[1]};
    rows[6] = {s(0), s(0), s(0), s(0), s(0), s(0), q[0], -q[2]};
    rows[7] = {s(0), s(0), s(0), s(0), s(0), s(0), s(0), q[0]};
    return Matrix::from_rows(Q, rows);
  };

  // distinct primes identify every entry uniquely
  ScalarVec primes = qv({2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(regular_representation(g3, g3.element(primes)) == expected(primes));

  Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    ScalarVec q = rng.vector(Q, 8);
    Matrix m = regular_representation(g3, g3.element(q));
    CHECK(m == expected(q));
    // spot rows 2 and 3 (1-indexed) explicitly
    CHECK(m.row(1) == ScalarVec{Scalar::zero(Q), q[0], Scalar::zero(Q),
                                Scalar::zero(Q), -q[2], Scalar::zero(Q), -q[3],
                                q[5]});
    CHECK(m.row(2) == ScalarVec{Scalar::zero(Q), Scalar::zero(Q), q[0],
                                Scalar::zero(Q), q[1], -q[3], Scalar::zero(Q),
                                -q[6]});
    // row 1 is x itself
    CHECK(m.row(0) == q);
  }

  // x = e3: single 1 in column 4 of row 1
  Matrix m3 = regular_representation(g3, unit(g3, "e3"));
  ScalarVec r0 = zero_vector(Q, 8);
  r0[3] = Scalar::one(Q);
  CHECK(m3.row(0) == r0);
}

TEST_CASE("regular representation is an antihomomorphism in matrix order") {
  Rng rng(7);
  Algebra g3 = grassmann(3, Q);
  for (int t = 0; t < 25; ++t) {
    Element x = g3.element(rng.vector(Q, 8));
    Element y = g3.element(rng.vector(Q, 8));
    Matrix mx = regular_representation(g3, x);
    Matrix my = regular_representation(g3, y);
    CHECK(regular_representation(g3, mul(x, y)) == my * mx);
  }
}

TEST_CASE("commutation tests agree with the regular representation") {
  Rng rng(8);
  for (Rank3Kind kind : {Rank3Kind::K, Rank3Kind::R, Rank3Kind::S, Rank3Kind::T}) {
    Algebra a = rank3_algebra(kind, Rational(5));
    bool comm = is_commutative(a);
    bool mats_commute = true;
    for (int t = 0; t < 10; ++t) {
      Element x = a.element(rng.vector(Q, a.dim()));
      Element y = a.element(rng.vector(Q, a.dim()));
      Matrix mx = regular_representation(a, x);
      Matrix my = regular_representation(a, y);
      if (mx * my != my * mx) mats_commute = false;
      CHECK((commutator(x, y).is_zero() ||
             !comm));  // commutative => all commutators vanish
    }
    CHECK(comm == mats_commute);
  }
}

TEST_CASE("rank3 algebras: commutativity and the e13 commutator") {
  CHECK(is_commutative(rank3_algebra(Rank3Kind::K)));
  CHECK(is_commutative(rank3_algebra(Rank3Kind::R)));
  CHECK(is_commutative(rank3_algebra(Rank3Kind::S, Rational(7) / Rational(3))));
  Algebra t = rank3_algebra(Rank3Kind::T);
  CHECK(!is_commutative(t));
  CHECK(commutator(unit(t, "e12"), unit(t, "e23")) == unit(t, "e13"));
  CHECK_THROWS_AS(rank3_algebra(Rank3Kind::S, Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("right ideal closure") {
  Algebra t = rank3_algebra(Rank3Kind::T);
  // span{1} generates everything
  Subspace from_one = right_ideal_closure(
      t, Subspace::span(Q, 4, {t.one_coords()}));
  CHECK(from_one == Subspace::full(Q, 4));

  // M = span{e23} is already a right ideal
  ScalarVec e23 = unit(t, "e23").coords();
  Subspace m = Subspace::span(Q, 4, {e23});
  CHECK(right_ideal_closure(t, m) == m);

  // span{e12} closes up to span{e12, e13}
  ScalarVec e12 = unit(t, "e12").coords();
  ScalarVec e13 = unit(t, "e13").coords();
  Subspace closed = right_ideal_closure(t, Subspace::span(Q, 4, {e12}));
  CHECK(closed == Subspace::span(Q, 4, {e12, e13}));
}

TEST_CASE("group algebra over F2 of the quaternion group") {
  FieldSpec f2 = FieldSpec::prime_field(2);
  Algebra a = group_algebra(quaternion_group(), f2);
  CHECK(a.dim() == 8);
  CHECK(a.validate().empty());
  CHECK(!is_commutative(a));
  FiniteRing r = as_finite_ring(a);
  CHECK(r.ring_order() == 256);
  CHECK(as_fp_algebra(r) == a);

  long count = 0;
  for_each_element(r, kDefaultEnumerationBound, [&](const IntVec&) { ++count; });
  CHECK(count == 256);
}

TEST_CASE("enumeration bound and small rings") {
  FiniteRing z4 = endomorphism_ring(parse_group_spec("2:2"));
  CHECK(z4.ring_order() == 4);
  long n = 0;
  for_each_element(z4, 16, [&](const IntVec&) { ++n; });
  CHECK(n == 4);
  CHECK_THROWS_AS(for_each_element(z4, 3, [](const IntVec&) {}),
                  BoundExceeded);

  FiniteRing e24 = endomorphism_ring(parse_group_spec("2:1,2:2"));
  CHECK(e24.ring_order() == 32);
  CHECK(e24.validate().empty());

  // lexicographic enumeration: index round-trips
  std::uint64_t idx = 0;
  for_each_element(e24, 64, [&](const IntVec& v) {
    CHECK(index_of_element(e24, v) == idx);
    ++idx;
  });
}

TEST_CASE("endomorphism ring structure") {
  // End(Z2 + Z2) = Mat2(F2): order 16, noncommutative
  FiniteRing m2 = endomorphism_ring(parse_group_spec("2:1,2:1"));
  CHECK(m2.ring_order() == 16);
  CHECK(m2.validate().empty());
  CHECK(!is_commutative(m2));

  // coprime cyclic components: End(Z2 + Z3) = Z/6, commutative
  FiniteRing z6 = endomorphism_ring(parse_group_spec("2:1,3:1"));
  CHECK(z6.ring_order() == 6);
  CHECK(is_commutative(z6));

  // h_ij composition via the divisibility factors: in End(Z2 + Z4),
  // h_01 . h_10 = 2 h_00 (through the smaller summand and back).
  FiniteAbelianGroup g = parse_group_spec("2:1,2:2");
  FiniteRing e = endomorphism_ring(g);
  int i01 = endomorphism_generator_index(g, 0, 1);
  int i10 = endomorphism_generator_index(g, 1, 0);
  int i00 = endomorphism_generator_index(g, 0, 0);
  IntVec prod = e.mul_coords(e.generator(i01).coords(), e.generator(i10).coords());
  IntVec expect(e.generator_count(), 0);
  expect[i00] = mod_floor(Int(2), e.moduli()[i00]);  // order 2 summand: = 0
  CHECK(prod == expect);

  CHECK_THROWS_AS(endomorphism_ring(parse_group_spec("2:30")), BoundExceeded);
}

TEST_CASE("change of basis preserves validity and commutativity") {
  Rng rng(33);
  Algebra g2 = grassmann(2, Q);
  Algebra t = rank3_algebra(Rank3Kind::T);
  for (const Algebra& a : {g2, t}) {
    Matrix p = rng.invertible(Q, a.dim());
    Algebra b = change_basis(a, p);
    CHECK(b.validate().empty());
    CHECK(is_commutative(a) == is_commutative(b));
  }
}

TEST_CASE("quotient by a two-sided ideal") {
  Algebra t = rank3_algebra(Rank3Kind::T);
  Subspace j = Subspace::span(
      Q, 4,
      {unit(t, "e12").coords(), unit(t, "e13").coords(), unit(t, "e23").coords()});
  QuotientAlgebra quo = quotient_by_ideal(t, j);
  CHECK(quo.algebra.dim() == 1);
  CHECK(quo.algebra.validate().empty());
  CHECK(is_commutative(quo.algebra));
  // projection kills the ideal
  CHECK(cering::is_zero(quo.project(unit(t, "e12").coords())));
  CHECK(!cering::is_zero(quo.project(t.one_coords())));
}

TEST_CASE("finite ring validate flags ill-defined tables") {
  // Z/2 x Z/4 with g0*g0 = g1: 2*(g0*g0) must vanish but 2 g1 != 0.
  FiniteRing bad({Int(2), Int(4)}, {"g0", "g1"},
                 {{0, 0, 1, Int(1)},
                  {0, 1, 1, Int(0)},
                  {1, 0, 1, Int(0)},
                  {1, 1, 1, Int(0)}},
                 {Int(1), Int(0)});
  auto v = bad.validate();
  REQUIRE(!v.empty());
  CHECK(v[0].kind == "well-defined");
}

TEST_CASE("element parent mismatch is rejected") {
  Algebra a = grassmann(2, Q);
  Algebra b = grassmann(2, Q);
  CHECK_THROWS_AS(mul(a.one_element(), b.one_element()), std::invalid_argument);
}
