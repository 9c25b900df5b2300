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

#ifndef CERING_IO_HPP
#define CERING_IO_HPP

#include <string>
#include <variant>

#include "cering/ce.hpp"

namespace cering {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// JSON interchange format. Scalars travel as decimal strings ("5", "-3/2")
/// so no precision is ever lost:
///   {"field": {"kind":"Q"} | {"kind":"Fp","p":P} | {"kind":"Zm","moduli":[..]},
///    "dim": N, "basis": [names], "one": ["coords"...],
///    "mul": [[i,j,k,"c"], ...]}
/// Emit-then-load reproduces an identical ring.
std::string to_json(const Algebra& a);
std::string to_json(const FiniteRing& r);

using LoadedRing = std::variant<Algebra, FiniteRing>;
/// Throws ParseError with a description of the offending field.
LoadedRing ring_from_json(const std::string& text);

/// Reports; both renderings are deterministic for a fixed report.
std::string report_json(const CEReport& rep, const std::string& ring_name);
std::string report_text(const CEReport& rep, const std::string& ring_name);

}  // namespace cering

#endif  // CERING_IO_HPP
