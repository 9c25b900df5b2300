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

#include "cering/io.hpp"

using namespace cering;

TEST_CASE("JSON round-trip is lossless for every gallery ring") {
  for (const GalleryInstance& inst : standard_instances()) {
    CAPTURE(inst.name);
    if (inst.is_algebra()) {
      std::string text = to_json(inst.algebra());
      LoadedRing back = ring_from_json(text);
      REQUIRE(std::holds_alternative<Algebra>(back));
      CHECK(std::get<Algebra>(back) == inst.algebra());
      // emit of the reload is byte-identical
      CHECK(to_json(std::get<Algebra>(back)) == text);
    } else {
      std::string text = to_json(inst.finite_ring());
      LoadedRing back = ring_from_json(text);
      REQUIRE(std::holds_alternative<FiniteRing>(back));
      CHECK(std::get<FiniteRing>(back) == inst.finite_ring());
      CHECK(to_json(std::get<FiniteRing>(back)) == text);
    }
  }
}

TEST_CASE("rationals keep exact string forms") {
  Algebra s = rank3_algebra(Rank3Kind::S, Rational(7) / Rational(3));
  std::string text = to_json(s);
  CHECK(text.find("\"7/3\"") != std::string::npos);
  LoadedRing back = ring_from_json(text);
  CHECK(std::get<Algebra>(back) == s);
}

TEST_CASE("parse errors carry field diagnostics") {
  CHECK_THROWS_AS(ring_from_json("{"), ParseError);
  CHECK_THROWS_AS(ring_from_json("[1,2]"), ParseError);
  CHECK_THROWS_AS(ring_from_json("{\"dim\": 2}"), ParseError);
  CHECK_THROWS_AS(
      ring_from_json(R"({"field":{"kind":"X"},"dim":1,"basis":["1"],
                        "one":["1"],"mul":[]})"),
      ParseError);
  CHECK_THROWS_AS(
      ring_from_json(R"({"field":{"kind":"Fp","p":"4"},"dim":1,"basis":["1"],
                        "one":["1"],"mul":[[0,0,0,"1"]]})"),
      ParseError);
  CHECK_THROWS_AS(
      ring_from_json(R"({"field":{"kind":"Q"},"dim":1,"basis":["1"],
                        "one":["1"],"mul":[[0,0,5,"1"]]})"),
      ParseError);
  CHECK_THROWS_AS(
      ring_from_json(R"({"field":{"kind":"Q"},"dim":1,"basis":["1"],
                        "one":["0.5"],"mul":[]})"),
      ParseError);

  // planted associativity defect loads fine but fails validate
  LoadedRing bad = ring_from_json(
      R"({"field":{"kind":"Q"},"dim":3,"basis":["1","x","y"],
          "one":["1","0","0"],
          "mul":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[0,2,2,"1"],
                 [2,0,2,"1"],[1,1,2,"1"],[1,2,0,"1"]]})");
  CHECK(!std::get<Algebra>(bad).validate().empty());
}

TEST_CASE("reports serialize deterministically") {
  Algebra t = rank3_algebra(Rank3Kind::T);
  CEReport rep = ce_report(t);
  std::string a = report_json(rep, "rank3-T");
  std::string b = report_json(ce_report(t), "rank3-T");
  CHECK(a == b);
  CHECK(a.find("\"decision\": \"false\"") != std::string::npos);
  CHECK(a.find("\"witness_failure\"") != std::string::npos);
  std::string text = report_text(rep, "rank3-T");
  CHECK(text.find("centrally essential: false") != std::string::npos);
}
