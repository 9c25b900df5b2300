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

// Acceptance runner: executes every criterion and prints one PASS/FAIL line
// each. Exit status 0 iff all pass.

#include <cstdio>
#include <iostream>

#include "cering/suite.hpp"

int main() {
  cering::SuiteOptions opt;
  std::vector<cering::CriterionRow> rows = cering::run_acceptance_suite(opt);
  std::cout << cering::format_rows_text(rows);
  for (const cering::CriterionRow& r : rows)
    if (!r.pass) return 1;
  return 0;
}
