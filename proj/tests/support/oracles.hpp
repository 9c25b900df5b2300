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

#ifndef CERING_TESTS_ORACLES_HPP
#define CERING_TESTS_ORACLES_HPP

#include <optional>
#include <vector>

#include "cering/algebra.hpp"

namespace cering::testing {

/// All elements of a small finite ring, in enumeration order.
inline std::vector<IntVec> all_elements(const FiniteRing& r,
                                        std::uint64_t bound = 4096) {
  std::vector<IntVec> out;
  for_each_element(r, bound, [&](const IntVec& v) { out.push_back(v); });
  return out;
}

/// Exhaustive Jacobson radical oracle: x lies in J(R) iff 1 - r x is a unit
/// for every r. Unit detection is a full multiplication scan, so this is
/// completely independent of the production linear-algebra path.
inline std::vector<IntVec> exhaustive_radical(const FiniteRing& r,
                                              std::uint64_t bound = 4096) {
  std::vector<IntVec> elems = all_elements(r, bound);
  const std::size_t n = elems.size();
  std::vector<bool> right_inv(n, false), left_inv(n, false);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (r.mul_coords(elems[u], elems[v]) == r.one_coords()) {
        right_inv[u] = true;
        left_inv[v] = true;
      }
    }
  auto unit = [&](const IntVec& x) {
    std::uint64_t idx = index_of_element(r, x);
    return right_inv[idx] && left_inv[idx];
  };
  std::vector<IntVec> radical;
  for (const IntVec& x : elems) {
    bool in_radical = true;
    for (const IntVec& rr : elems) {
      IntVec rx = r.mul_coords(rr, x);
      IntVec one_minus(rx.size());
      for (std::size_t k = 0; k < rx.size(); ++k)
        one_minus[k] = mod_floor(r.one_coords()[k] - rx[k], r.moduli()[k]);
      if (!unit(one_minus)) {
        in_radical = false;
        break;
      }
    }
    if (in_radical) radical.push_back(x);
  }
  return radical;
}

/// Definition-level centrally-essential oracle: centrality is checked by
/// commuting with every generator, never through the center module. Returns
/// the first failing element, or nullopt when the ring is centrally
/// essential.
inline std::optional<IntVec> naive_ce_witness(const FiniteRing& r,
                                              std::uint64_t bound = 4096) {
  std::vector<IntVec> elems = all_elements(r, bound);
  auto central = [&](const IntVec& x) {
    for (int i = 0; i < r.generator_count(); ++i) {
      IntVec g = r.generator(i).coords();
      if (r.mul_coords(x, g) != r.mul_coords(g, x)) return false;
    }
    return true;
  };
  std::vector<IntVec> center_elems;
  for (const IntVec& x : elems)
    if (central(x)) center_elems.push_back(x);
  auto zero = [](const IntVec& v) {
    for (const Int& c : v)
      if (c != 0) return false;
    return true;
  };
  for (const IntVec& a : elems) {
    if (zero(a)) continue;
    bool ok = false;
    for (const IntVec& x : center_elems) {
      IntVec y = r.mul_coords(a, x);
      if (!zero(y) && central(y)) {
        ok = true;
        break;
      }
    }
    if (!ok) return a;
  }
  return std::nullopt;
}

}  // namespace cering::testing

#endif  // CERING_TESTS_ORACLES_HPP
