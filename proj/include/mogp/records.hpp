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

#pragma once

// Flat key=value text records shared by the CLI, the service and lab notes:
//
//   v1=0,v2=400,v3=127.5,v4=1.1,v5=13,v6=1
//   strength=28.1,cost=0.64,failure_mode=cohesive,visual_damage=false
//
// Pairs are separated by commas, semicolons or whitespace. Numbers are written
// in shortest round-trip form, so parse(format(x)) == x bit for bit.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mogp/domain.hpp"

namespace mogp {

std::string format_number(double value);
/// Strict full-string parse; throws DomainError naming the field.
double parse_number(std::string_view text, std::string_view field);

/// Splits "k=v" pairs; throws DomainError on a malformed pair or repeated key.
std::map<std::string, std::string> parse_key_values(std::string_view text);

std::string format_configuration(const Configuration& config, const DesignSpace& space);
/// Requires exactly the space's variable ids; validates bounds and rounding.
Configuration parse_configuration(std::string_view record, const DesignSpace& space);

std::string format_outcome(const Outcome& outcome);
Outcome parse_outcome(std::string_view record);

/// Outcome table with header "strength,cost,failure_mode,visual_damage"
/// (columns in any order, one replication per row).
std::string format_outcomes_csv(const std::vector<Outcome>& outcomes);
std::vector<Outcome> parse_outcomes_csv(std::string_view text);

}  // namespace mogp
