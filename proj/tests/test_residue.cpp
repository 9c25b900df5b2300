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

#include <algorithm>

#include "cering/residue.hpp"
#include "support/random_helpers.hpp"

using namespace cering;
using cering::testing::Rng;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

}  // namespace

TEST_CASE("howell canonical bases for the stated examples") {
  ResidueModule m1 = ResidueModule::howell({iv({2})}, iv({4}));
  REQUIRE(m1.row_count() == 1);
  CHECK(m1.rows()[0] == iv({2}));
  CHECK(m1.element_count() == 2);

  ResidueModule m2 = ResidueModule::howell({iv({2}), iv({3})}, iv({4}));
  REQUIRE(m2.row_count() == 1);
  CHECK(m2.rows()[0] == iv({1}));
  CHECK(m2 == ResidueModule::full(iv({4})));

  ResidueModule m3 =
      ResidueModule::howell({iv({2, 0}), iv({0, 2})}, iv({4, 4}));
  REQUIRE(m3.row_count() == 2);
  CHECK(m3.rows()[0] == iv({2, 0}));
  CHECK(m3.rows()[1] == iv({0, 2}));
  CHECK(m3.element_count() == 4);
}

TEST_CASE("howell handles mixed moduli") {
  // Z/2 x Z/4: the diagonal element (1,2) has order 2.
  ResidueModule m = ResidueModule::howell({iv({1, 2})}, iv({2, 4}));
  CHECK(m.element_count() == 2);
  CHECK(m.contains_vector(iv({1, 2})));
  CHECK(!m.contains_vector(iv({1, 0})));
  CHECK(!m.contains_vector(iv({0, 2})));
  CHECK(m.contains_vector(iv({0, 0})));

  auto els = m.elements(16);
  REQUIRE(els.has_value());
  CHECK(els->size() == 2);
}

TEST_CASE("howell form is canonical under regenerating sets") {
  Rng rng(31337);
  std::vector<long> moduli_pool = {2, 3, 4, 6, 8, 9, 12};
  for (int t = 0; t < 300; ++t) {
    int n = rng.uniform(1, 4);
    IntVec moduli;
    for (int i = 0; i < n; ++i)
      moduli.push_back(Int(moduli_pool[rng.uniform(0, 6)]));
    int g = rng.uniform(1, 4);
    IntMat gens;
    for (int i = 0; i < g; ++i) gens.push_back(rng.int_vector(moduli));
    ResidueModule a = ResidueModule::howell(gens, moduli);

    // Regenerate: original rows plus random integer combinations, shuffled.
    IntMat gens2 = gens;
    for (int extra = 0; extra < 3; ++extra) {
      IntVec comb(moduli.size(), 0);
      for (const IntVec& row : gens) {
        Int c = rng.uniform(0, 11);
        for (std::size_t j = 0; j < comb.size(); ++j)
          comb[j] = mod_floor(comb[j] + c * row[j], moduli[j]);
      }
      gens2.push_back(std::move(comb));
    }
    std::shuffle(gens2.begin(), gens2.end(), rng.engine());
    ResidueModule b = ResidueModule::howell(gens2, moduli);
    CHECK(a == b);

    // Every generator must be a member.
    for (const IntVec& row : gens) CHECK(a.contains_vector(row));
  }
}

TEST_CASE("element count multiplies over sum and intersection") {
  Rng rng(4242);
  std::vector<long> moduli_pool = {2, 3, 4, 8, 9};
  for (int t = 0; t < 200; ++t) {
    int n = rng.uniform(1, 3);
    IntVec moduli;
    for (int i = 0; i < n; ++i)
      moduli.push_back(Int(moduli_pool[rng.uniform(0, 4)]));
    IntMat gu, gv;
    for (int i = 0, e = rng.uniform(0, 3); i < e; ++i)
      gu.push_back(rng.int_vector(moduli));
    for (int i = 0, e = rng.uniform(0, 3); i < e; ++i)
      gv.push_back(rng.int_vector(moduli));
    ResidueModule u = ResidueModule::howell(gu, moduli);
    ResidueModule v = ResidueModule::howell(gv, moduli);
    ResidueModule s = module_sum(u, v);
    ResidueModule i = intersect(u, v);
    CHECK(u.element_count() * v.element_count() ==
          s.element_count() * i.element_count());
    CHECK(contains(s, u));
    CHECK(contains(u, i));
    CHECK(contains(v, i));
    CHECK(((contains(u, v) && contains(v, u)) == (u == v)));
  }
}

TEST_CASE("membership matches explicit enumeration") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    IntVec moduli = {Int(4), Int(6)};
    IntMat gens = {rng.int_vector(moduli)};
    ResidueModule m = ResidueModule::howell(gens, moduli);
    auto els = m.elements(64);
    REQUIRE(els.has_value());
    CHECK(Int(static_cast<long>(els->size())) == m.element_count());
    // All enumerated elements are members and pairwise distinct.
    std::vector<IntVec> sorted = *els;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (const IntVec& e : *els) CHECK(m.contains_vector(e));
    // Count members by brute force and compare.
    long members = 0;
    for (long a = 0; a < 4; ++a)
      for (long b = 0; b < 6; ++b)
        if (m.contains_vector(iv({a, b}))) ++members;
    CHECK(Int(members) == m.element_count());
  }
}

TEST_CASE("kernel_mod and solve_mod") {
  // Reduction Z/4 -> Z/2 has kernel (2).
  ResidueModule k = kernel_mod({iv({1})}, iv({4}), iv({2}));
  REQUIRE(k.row_count() == 1);
  CHECK(k.rows()[0] == iv({2}));

  // x -> 2x on Z/4: kernel (2), and 2 is reachable while 1 and 3 are not.
  ResidueModule k2 = kernel_mod({iv({2})}, iv({4}), iv({4}));
  CHECK(k2.rows()[0] == iv({2}));
  auto s = solve_mod({iv({2})}, iv({4}), iv({4}), iv({2}));
  REQUIRE(s.has_value());
  CHECK(mod_floor((*s)[0] * 2, Int(4)) == 2);
  CHECK(!solve_mod({iv({2})}, iv({4}), iv({4}), iv({1})).has_value());
  CHECK(!solve_mod({iv({2})}, iv({4}), iv({4}), iv({3})).has_value());

  // Ill-defined map rejected: Z/2 -> Z/4 by x -> x.
  CHECK_THROWS_AS(kernel_mod({iv({1})}, iv({2}), iv({4})),
                  std::invalid_argument);
}

TEST_CASE("kernel_mod matches brute force on random maps") {
  Rng rng(555);
  std::vector<long> pool = {2, 3, 4, 6, 8};
  for (int t = 0; t < 120; ++t) {
    int sn = rng.uniform(1, 3), dn = rng.uniform(1, 3);
    IntVec src, dst;
    for (int i = 0; i < sn; ++i) src.push_back(Int(pool[rng.uniform(0, 4)]));
    for (int i = 0; i < dn; ++i) dst.push_back(Int(pool[rng.uniform(0, 4)]));
    // Build a well-defined map: entry (j,k) must be a multiple of
    // dst_k / gcd(src_j, dst_k).
    IntMat f(sn, IntVec(dn, 0));
    for (int j = 0; j < sn; ++j)
      for (int kcol = 0; kcol < dn; ++kcol) {
        Int step = dst[kcol] / boost::multiprecision::gcd(src[j], dst[kcol]);
        f[j][kcol] = mod_floor(step * rng.uniform(0, 12), dst[kcol]);
      }
    ResidueModule ker = kernel_mod(f, src, dst);

    auto apply = [&](const IntVec& x) {
      IntVec y(dn, 0);
      for (int kcol = 0; kcol < dn; ++kcol) {
        for (int j = 0; j < sn; ++j) y[kcol] += x[j] * f[j][kcol];
        y[kcol] = mod_floor(y[kcol], dst[kcol]);
      }
      return y;
    };

    // Enumerate the whole source (small by construction) and compare.
    long total = 1;
    for (const Int& m : src) total *= static_cast<long>(m);
    long in_kernel = 0;
    IntVec x(sn, 0);
    for (long idx = 0; idx < total; ++idx) {
      long rest = idx;
      for (int j = sn - 1; j >= 0; --j) {
        x[j] = Int(rest % static_cast<long>(src[j]));
        rest /= static_cast<long>(src[j]);
      }
      IntVec y = apply(x);
      bool zero = std::all_of(y.begin(), y.end(),
                              [](const Int& v) { return v == 0; });
      if (zero) {
        ++in_kernel;
        CHECK(ker.contains_vector(x));
      } else {
        CHECK(!ker.contains_vector(x));
        // solve must reproduce exactly the reachable values
        auto sol = solve_mod(f, src, dst, y);
        REQUIRE(sol.has_value());
        CHECK(apply(*sol) == y);
      }
    }
    CHECK(Int(in_kernel) == ker.element_count());
  }
}
