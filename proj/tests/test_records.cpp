// Copyright 2026 The mogp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <random>

#include "mogp/errors.hpp"
#include "mogp/records.hpp"

using namespace mogp;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("numbers round-trip bit for bit") {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(gen) / 7.0;
    CHECK(parse_number(format_number(x), "x") == x);
  }
  CHECK(format_number(127.5) == "127.5");
  CHECK(format_number(0.1) == "0.1");
  CHECK_THROWS_AS(parse_number("1.5x", "v3"), DomainError);
  CHECK_THROWS_AS(parse_number("nan", "v3"), DomainError);
  CHECK_THROWS_WITH(parse_number("", "v3"), ContainsSubstring("v3"));
}

TEST_CASE("configuration records") {
  const auto space = DesignSpace::bonding();
  const Configuration c{{0, 400, 127.5, 1.1, 13, 1}};
  const auto text = format_configuration(c, space);
  CHECK(text == "v1=0,v2=400,v3=127.5,v4=1.1,v5=13,v6=1");
  CHECK(parse_configuration(text, space) == c);
  CHECK(parse_configuration("v6=1 v5=13; v4=1.1,v3=127.5 v2=400 v1=0", space) == c);
  CHECK_THROWS_WITH(parse_configuration("v1=0,v2=400,v3=127.5,v4=1.1,v5=13", space), ContainsSubstring("v6"));
  CHECK_THROWS_AS(parse_configuration("v1=0,v2=400,v3=127.5,v4=1.1,v5=13,v6=1,v7=2", space), DomainError);
  CHECK_THROWS_AS(parse_configuration("v1=0,v1=1,v2=400,v3=127.5,v4=1.1,v5=13,v6=1", space), DomainError);
  CHECK_THROWS_WITH(parse_configuration("v1=0,v2=400,v3=127.5,v4=1.1,v5=13.5,v6=1", space), ContainsSubstring("v5"));
  CHECK_THROWS_AS(parse_configuration("v1=0,v2", space), DomainError);
}

TEST_CASE("outcome records and tables") {
  const Outcome o{28.125, 0.641, FailureMode::cohesive, false};
  CHECK(format_outcome(o) == "strength=28.125,cost=0.641,failure_mode=cohesive,visual_damage=false");
  CHECK(parse_outcome(format_outcome(o)) == o);
  CHECK_THROWS_AS(parse_outcome("strength=1,cost=1,failure_mode=glue,visual_damage=false"), DomainError);
  CHECK_THROWS_AS(parse_outcome("strength=1,cost=1,failure_mode=cohesive"), DomainError);

  std::vector<Outcome> rows{o, {10, 1.3, FailureMode::adhesion, true}, {35, 0.7, FailureMode::substrate, false}};
  const auto csv = format_outcomes_csv(rows);
  CHECK(csv.rfind("strength,cost,failure_mode,visual_damage\n", 0) == 0);
  CHECK(parse_outcomes_csv(csv) == rows);
  // Column order is free; blank and comment lines are skipped.
  const auto shuffled = parse_outcomes_csv(
      "failure_mode,visual_damage,cost,strength\n# lab bench 2\ncohesive,false,0.641,28.125\n\n");
  REQUIRE(shuffled.size() == 1);
  CHECK(shuffled[0] == o);
  CHECK_THROWS_AS(parse_outcomes_csv("strength,cost\n1,2\n"), DomainError);
  CHECK_THROWS_AS(parse_outcomes_csv("strength,cost,failure_mode,visual_damage\n1,2,cohesive\n"), DomainError);
  CHECK_THROWS_AS(parse_outcomes_csv(""), DomainError);
}
