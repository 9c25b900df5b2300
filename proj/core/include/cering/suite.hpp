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

#ifndef CERING_SUITE_HPP
#define CERING_SUITE_HPP

#include <string>
#include <vector>

#include "cering/algebra.hpp"

namespace cering {

struct SuiteOptions {
  std::uint64_t seed = 20260810;
  int trials = 100;          // derivation-ring sampling trials
  std::uint64_t bound = kDefaultEnumerationBound;
  int jobs = 1;
  int property_cases = 1000;  // randomized cases per linear-algebra property
};

struct CriterionRow {
  int id = 0;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Run the full verification suite: every concrete ring fact, the dual-path
/// agreement sweeps, the sampled derivation-ring check and the randomized
/// canonical-form properties. One row per criterion.
std::vector<CriterionRow> run_acceptance_suite(const SuiteOptions& opt = {});

std::string format_rows_text(const std::vector<CriterionRow>& rows);
std::string format_rows_json(const std::vector<CriterionRow>& rows);

}  // namespace cering

#endif  // CERING_SUITE_HPP
