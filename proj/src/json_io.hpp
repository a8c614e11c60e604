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

// JSON mappings shared by the campaign document and the HTTP service. Field
// names follow the key=value record format (v1..v6, strength, cost,
// failure_mode, visual_damage).

#include <json.hpp>

#include "mogp/campaign.hpp"

namespace mogp::json_io {

using nlohmann::json;

json to_json(const DesignSpace& space);
DesignSpace design_space_from_json(const json& j);

json to_json(const Configuration& config, const DesignSpace& space);
/// Object {"v1": ..} or array [..]; validated against the space.
Configuration configuration_from_json(const json& j, const DesignSpace& space);

json to_json(const Outcome& outcome);
Outcome outcome_from_json(const json& j);

json to_json(const CampaignSettings& settings);
/// Missing fields keep their defaults.
CampaignSettings settings_from_json(const json& j);

json to_json(const ModelSummary& summary);
ModelSummary model_summary_from_json(const json& j);

json to_json(const ObjectiveVector& v);
ObjectiveVector objective_vector_from_json(const json& j);

}  // namespace mogp::json_io
