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

#include "json_io.hpp"

#include <cmath>

namespace mogp::json_io {

namespace {

std::string_view kind_name(VariableKind k) {
  switch (k) {
    case VariableKind::binary:
      return "binary";
    case VariableKind::integer:
      return "integer";
    case VariableKind::continuous:
      return "continuous";
  }
  return "continuous";
}

VariableKind parse_kind(const std::string& s) {
  if (s == "binary") return VariableKind::binary;
  if (s == "integer") return VariableKind::integer;
  if (s == "continuous") return VariableKind::continuous;
  throw DomainError("unknown variable kind '" + s + "'");
}

double number(const json& j, const char* field) {
  if (!j.is_number()) throw DomainError(std::string(field) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw DomainError(std::string(field) + " must be finite");
  return v;
}

template <typename T>
void read_if(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

json to_json(const DesignSpace& space) {
  json arr = json::array();
  for (const auto& v : space.variables()) {
    arr.push_back({{"id", v.id},
                   {"label", v.label},
                   {"kind", kind_name(v.kind)},
                   {"lower", v.lower},
                   {"upper", v.upper},
                   {"unit", v.unit}});
  }
  return arr;
}

DesignSpace design_space_from_json(const json& j) {
  std::vector<VariableSpec> vars;
  for (const auto& v : j) {
    vars.push_back({v.at("id").get<std::string>(), v.at("label").get<std::string>(),
                    parse_kind(v.at("kind").get<std::string>()), v.at("lower").get<double>(),
                    v.at("upper").get<double>(), v.at("unit").get<std::string>()});
  }
  return DesignSpace(std::move(vars));
}

json to_json(const Configuration& config, const DesignSpace& space) {
  json obj = json::object();
  for (std::size_t i = 0; i < space.dimension(); ++i) obj[space.variable(i).id] = config.values.at(i);
  return obj;
}

Configuration configuration_from_json(const json& j, const DesignSpace& space) {
  std::vector<double> values(space.dimension());
  if (j.is_array()) {
    if (j.size() != space.dimension()) throw DomainError("configuration array has the wrong length");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = number(j[i], space.variable(i).id.c_str());
  } else if (j.is_object()) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      const auto& id = space.variable(i).id;
      if (!j.contains(id)) throw DomainError("configuration is missing " + id);
      values[i] = number(j.at(id), id.c_str());
    }
    for (const auto& [key, _] : j.items()) space.index_of(key);
  } else {
    throw DomainError("configuration must be an object of v1..v6");
  }
  Configuration c{std::move(values)};
  space.validate(c);
  return c;
}

json to_json(const Outcome& o) {
  return {{"strength", o.strength},
          {"cost", o.cost},
          {"failure_mode", to_string(o.failure_mode)},
          {"visual_damage", o.visual_damage}};
}

Outcome outcome_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("outcome must be an object");
  for (const char* key : {"strength", "cost", "failure_mode", "visual_damage"}) {
    if (!j.contains(key)) throw DomainError(std::string("outcome is missing ") + key);
  }
  Outcome o;
  o.strength = number(j.at("strength"), "strength");
  o.cost = number(j.at("cost"), "cost");
  if (!j.at("failure_mode").is_string()) throw DomainError("failure_mode must be a string");
  o.failure_mode = parse_failure_mode(j.at("failure_mode").get<std::string>());
  if (!j.at("visual_damage").is_boolean()) throw DomainError("visual_damage must be true or false");
  o.visual_damage = j.at("visual_damage").get<bool>();
  return o;
}

json to_json(const ObjectiveVector& v) { return {{"cost", v.cost}, {"neg_strength", v.neg_strength}}; }

ObjectiveVector objective_vector_from_json(const json& j) {
  return {j.at("cost").get<double>(), j.at("neg_strength").get<double>()};
}

json to_json(const CampaignSettings& s) {
  return {{"space", to_json(s.space)},
          {"init_size", s.init_size},
          {"iterations", s.iterations},
          {"replications", s.replications},
          {"rho", s.rho},
          {"ridge", s.ridge},
          {"gp_restarts", s.gp_restarts},
          {"seed", s.seed},
          {"reference", to_json(s.reference)},
          {"pso",
           {{"swarm_size", s.pso.swarm_size},
            {"max_iterations", s.pso.max_iterations},
            {"max_stall_iterations", s.pso.max_stall_iterations},
            {"tolerance", s.pso.tolerance},
            {"inertia", s.pso.inertia},
            {"cognitive", s.pso.cognitive},
            {"social", s.pso.social},
            {"velocity_clamp", s.pso.velocity_clamp}}}};
}

CampaignSettings settings_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("settings must be an object");
  CampaignSettings s;
  if (j.contains("space")) s.space = design_space_from_json(j.at("space"));
  read_if(j, "init_size", s.init_size);
  read_if(j, "iterations", s.iterations);
  read_if(j, "replications", s.replications);
  read_if(j, "rho", s.rho);
  read_if(j, "ridge", s.ridge);
  read_if(j, "gp_restarts", s.gp_restarts);
  read_if(j, "seed", s.seed);
  if (j.contains("reference")) s.reference = objective_vector_from_json(j.at("reference"));
  if (j.contains("pso")) {
    const auto& p = j.at("pso");
    read_if(p, "swarm_size", s.pso.swarm_size);
    read_if(p, "max_iterations", s.pso.max_iterations);
    read_if(p, "max_stall_iterations", s.pso.max_stall_iterations);
    read_if(p, "tolerance", s.pso.tolerance);
    read_if(p, "inertia", s.pso.inertia);
    read_if(p, "cognitive", s.pso.cognitive);
    read_if(p, "social", s.pso.social);
    read_if(p, "velocity_clamp", s.pso.velocity_clamp);
  }
  return s;
}

json to_json(const ModelSummary& m) {
  return {{"iteration", m.iteration},
          {"weights", m.weights.lambda},
          {"bounds", {{"min", m.bounds.min}, {"max", m.bounds.max}}},
          {"kernel",
           {{"process_variance", m.kernel.process_variance},
            {"inverse_lengthscales", m.kernel.inverse_lengthscales}}},
          {"kernel_mean", m.kernel_mean},
          {"log_likelihood", m.log_likelihood},
          {"feasibility",
           {{"beta0", m.feasibility.beta0},
            {"beta", m.feasibility.beta},
            {"converged", m.feasibility.converged},
            {"iterations_used", m.feasibility.iterations_used}}},
          {"incumbent", m.incumbent},
          {"incumbent_prediction", m.incumbent_prediction},
          {"acquisition", m.acquisition},
          {"pso_iterations", m.pso_iterations}};
}

ModelSummary model_summary_from_json(const json& j) {
  ModelSummary m;
  m.iteration = j.at("iteration").get<int>();
  m.weights.lambda = j.at("weights").get<std::vector<double>>();
  m.bounds.min = j.at("bounds").at("min").get<std::array<double, 2>>();
  m.bounds.max = j.at("bounds").at("max").get<std::array<double, 2>>();
  m.kernel.process_variance = j.at("kernel").at("process_variance").get<double>();
  m.kernel.inverse_lengthscales = j.at("kernel").at("inverse_lengthscales").get<std::vector<double>>();
  m.kernel_mean = j.at("kernel_mean").get<double>();
  m.log_likelihood = j.at("log_likelihood").get<double>();
  const auto& f = j.at("feasibility");
  m.feasibility.beta0 = f.at("beta0").get<double>();
  m.feasibility.beta = f.at("beta").get<std::vector<double>>();
  m.feasibility.converged = f.at("converged").get<bool>();
  m.feasibility.iterations_used = f.at("iterations_used").get<int>();
  m.incumbent = j.at("incumbent").get<std::vector<double>>();
  m.incumbent_prediction = j.at("incumbent_prediction").get<double>();
  m.acquisition = j.at("acquisition").get<double>();
  m.pso_iterations = j.at("pso_iterations").get<int>();
  return m;
}

}  // namespace mogp::json_io
