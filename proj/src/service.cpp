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

#include "mogp/service.hpp"

#include <httplib.h>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <random>

#include "json_io.hpp"
#include "mogp/errors.hpp"
#include "mogp/records.hpp"

namespace mogp {

namespace fs = std::filesystem;
using json_io::json;

namespace {

HttpResponse json_response(int status, const json& body) { return {status, body.dump(), "application/json"}; }

HttpResponse error_response(int status, const std::string& message) {
  return json_response(status, {{"error", message}});
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start < path.size()) {
    auto slash = path.find('/', start);
    if (slash == std::string_view::npos) slash = path.size();
    if (slash > start) parts.emplace_back(path.substr(start, slash - start));
    start = slash + 1;
  }
  return parts;
}

bool valid_id(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') return false;
  }
  return true;
}

json observation_json(const ReplicatedObservation& obs, const DesignSpace& space) {
  return {{"config", json_io::to_json(obs.config(), space)},
          {"pf", obs.pf()},
          {"feasible", obs.majority_feasible()},
          {"strength_mean", -obs.mean_objectives().neg_strength},
          {"cost_mean", obs.mean_objectives().cost},
          {"strength_var", obs.var_objectives().neg_strength},
          {"cost_var", obs.var_objectives().cost},
          {"replications", obs.replications()}};
}

}  // namespace

struct CampaignService::Entry {
  std::string id;
  std::mutex writer;  // serializes mutations
  mutable std::mutex snapshot_mutex;
  std::shared_ptr<const Campaign> snapshot;
  std::string created;
  std::string updated;

  std::shared_ptr<const Campaign> current() const {
    std::lock_guard lock(snapshot_mutex);
    return snapshot;
  }
  std::string last_update() const {
    std::lock_guard lock(snapshot_mutex);
    return updated;
  }
  void publish(Campaign next) {
    auto ptr = std::make_shared<const Campaign>(std::move(next));
    std::lock_guard lock(snapshot_mutex);
    snapshot = std::move(ptr);
    updated = utc_now();
  }
};

CampaignService::CampaignService(std::optional<fs::path> state_dir) : state_dir_(std::move(state_dir)) {
  id_salt_ = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}() ^
             static_cast<std::uint64_t>(std::chrono::steady_clock::now().time_since_epoch().count());
  if (!state_dir_) return;
  fs::create_directories(*state_dir_);
  for (const auto& file : fs::directory_iterator(*state_dir_)) {
    if (file.path().extension() != ".json") continue;
    const auto id = file.path().stem().string();
    if (!valid_id(id)) continue;
    auto entry = std::make_unique<Entry>();
    entry->id = id;
    entry->snapshot = std::make_shared<const Campaign>(Campaign::load(file.path()));
    entry->created = entry->updated = utc_now();
    campaigns_.emplace(id, std::move(entry));
  }
}

CampaignService::~CampaignService() = default;

std::vector<std::string> CampaignService::ids() const {
  std::shared_lock lock(registry_mutex_);
  std::vector<std::string> out;
  for (const auto& [id, _] : campaigns_) out.push_back(id);
  return out;
}

CampaignService::Entry* CampaignService::find(const std::string& id) const {
  std::shared_lock lock(registry_mutex_);
  auto it = campaigns_.find(id);
  return it == campaigns_.end() ? nullptr : it->second.get();
}

void CampaignService::persist(const std::string& id, const Campaign& campaign) const {
  if (state_dir_) campaign.save(*state_dir_ / (id + ".json"));
}

std::string CampaignService::new_id() {
  std::unique_lock lock(registry_mutex_);
  std::mt19937_64 mix(id_salt_ + ++id_counter_);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(mix()));
  return buf;
}

HttpResponse CampaignService::handle(std::string_view method, std::string_view path, std::string_view body) {
  const auto q = path.find('?');
  if (q != std::string_view::npos) path = path.substr(0, q);
  const auto parts = split_path(path);
  if (parts.size() < 2 || parts[0] != "v1" || parts[1] != "campaigns") {
    if (parts.size() == 2 && parts[0] == "v1" && parts[1] == "health" && method == "GET") {
      return json_response(200, {{"status", "ok"}});
    }
    return error_response(404, "no such endpoint");
  }
  try {
    if (parts.size() == 2) {
      if (method == "POST") return create(body);
      if (method == "GET") return json_response(200, {{"campaigns", ids()}});
      return error_response(405, "method not allowed");
    }
    Entry* entry = find(parts[2]);
    if (!entry) return error_response(404, "unknown campaign " + parts[2]);
    if (parts.size() == 3) {
      if (method == "GET") return describe(*entry);
      return error_response(405, "method not allowed");
    }
    if (parts.size() == 4) {
      const auto& leaf = parts[3];
      if (leaf == "suggestion") return method == "GET" ? suggestion(*entry) : error_response(405, "method not allowed");
      if (leaf == "observations") {
        return method == "POST" ? observe(*entry, body) : error_response(405, "method not allowed");
      }
      if (leaf == "front") return method == "GET" ? front(*entry) : error_response(405, "method not allowed");
      if (leaf == "history") return method == "GET" ? history(*entry) : error_response(405, "method not allowed");
    }
    return error_response(404, "no such endpoint");
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

HttpResponse CampaignService::create(std::string_view body) {
  CampaignSettings settings;
  try {
    json j = body.empty() ? json::object() : json::parse(body);
    if (!j.is_object()) return error_response(400, "settings must be a JSON object");
    settings = json_io::settings_from_json(j);
    if (j.contains("budget")) {
      const int budget = j.at("budget").get<int>();
      if (budget < settings.init_size) {
        return error_response(400, "budget " + std::to_string(budget) + " is smaller than init_size " +
                                       std::to_string(settings.init_size));
      }
      settings.iterations = budget - settings.init_size;
    }
    settings.validate();
  } catch (const json::exception& e) {
    return error_response(400, std::string("invalid settings: ") + e.what());
  } catch (const DomainError& e) {
    return error_response(400, std::string("invalid settings: ") + e.what());
  }

  Campaign campaign = Campaign::initialize(settings);
  const auto id = new_id();
  persist(id, campaign);
  auto entry = std::make_unique<Entry>();
  entry->id = id;
  entry->created = utc_now();
  entry->publish(campaign);

  json design = json::array();
  for (const auto& c : campaign.design()) design.push_back(json_io::to_json(c, settings.space));
  json out = {{"id", id},
              {"design", design},
              {"replications", settings.replications},
              {"budget", settings.budget()},
              {"space", json_io::to_json(settings.space)}};
  {
    std::unique_lock lock(registry_mutex_);
    campaigns_.emplace(id, std::move(entry));
  }
  return json_response(201, out);
}

HttpResponse CampaignService::describe(Entry& entry) const {
  const auto c = entry.current();
  const auto& space = c->settings().space;
  json pending = json::array();
  for (const auto& p : c->pending_design()) pending.push_back(json_io::to_json(p, space));
  json out = {{"id", entry.id},
              {"phase", to_string(c->phase())},
              {"iteration", c->iteration()},
              {"told", c->observations().size()},
              {"budget", c->settings().budget()},
              {"init_size", c->settings().init_size},
              {"replications", c->settings().replications},
              {"space", json_io::to_json(space)},
              {"reference", json_io::to_json(c->settings().reference)},
              {"pending_design", pending},
              {"pending_suggestion", c->pending_suggestion() ? json_io::to_json(*c->pending_suggestion(), space)
                                                             : json(nullptr)},
              {"created", entry.created},
              {"updated", entry.last_update()}};
  if (c->last_model()) out["model"] = json_io::to_json(*c->last_model());
  return json_response(200, out);
}

HttpResponse CampaignService::suggestion(Entry& entry) {
  std::lock_guard lock(entry.writer);
  const auto current = entry.current();
  const auto& space = current->settings().space;
  if (current->pending_suggestion()) {
    return json_response(200, {{"config", json_io::to_json(*current->pending_suggestion(), space)},
                               {"iteration", current->iteration()}});
  }
  Campaign next = *current;
  try {
    next.suggest();
  } catch (const BudgetExhausted& e) {
    return error_response(410, e.what());
  } catch (const StateError& e) {
    json pending = json::array();
    for (const auto& p : current->pending_design()) pending.push_back(json_io::to_json(p, space));
    return json_response(409, {{"error", e.what()}, {"pending_design", pending}});
  }
  persist(entry.id, next);
  const auto config = *next.pending_suggestion();
  const int iteration = next.iteration();
  entry.publish(std::move(next));
  return json_response(200, {{"config", json_io::to_json(config, space)}, {"iteration", iteration}});
}

HttpResponse CampaignService::observe(Entry& entry, std::string_view body) {
  std::lock_guard lock(entry.writer);
  const auto current = entry.current();
  const auto& space = current->settings().space;
  const int r = current->settings().replications;

  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception& e) {
    return error_response(400, std::string("body is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("config") || !j.contains("outcomes")) {
    return error_response(400, "body must be an object with config and outcomes");
  }
  Configuration config;
  std::vector<Outcome> outcomes;
  try {
    config = json_io::configuration_from_json(j.at("config"), space);
    const auto& rows = j.at("outcomes");
    if (!rows.is_array()) return error_response(422, "outcomes must be an array");
    for (const auto& row : rows) outcomes.push_back(json_io::outcome_from_json(row));
  } catch (const DomainError& e) {
    return error_response(422, e.what());
  } catch (const json::exception& e) {
    return error_response(422, e.what());
  }
  if (static_cast<int>(outcomes.size()) != r) {
    return error_response(422, "expected " + std::to_string(r) + " replication outcomes, got " +
                                   std::to_string(outcomes.size()));
  }

  Campaign next = *current;
  json summary;
  try {
    const auto& obs = next.tell(config, std::move(outcomes));
    summary = observation_json(obs, space);
  } catch (const DomainError& e) {
    return error_response(409, e.what());
  } catch (const StateError& e) {
    return error_response(409, e.what());
  }
  persist(entry.id, next);
  summary["phase"] = to_string(next.phase());
  summary["iteration"] = next.iteration();
  summary["told"] = next.observations().size();
  entry.publish(std::move(next));
  return json_response(200, summary);
}

HttpResponse CampaignService::front(Entry& entry) const {
  const auto c = entry.current();
  const auto& space = c->settings().space;
  const auto report = c->current_front();
  json points = json::array();
  for (const auto& p : report.points) {
    points.push_back({{"config", json_io::to_json(p.config, space)},
                      {"pf", p.pf},
                      {"minimization", {{"cost", p.mean.cost}, {"neg_strength", p.mean.neg_strength}}},
                      {"display", {{"cost", p.mean.cost}, {"strength", -p.mean.neg_strength}}}});
  }
  const auto& ref = c->settings().reference;
  return json_response(200, {{"points", points},
                             {"hv", report.hv},
                             {"reference",
                              {{"minimization", json_io::to_json(ref)},
                               {"display", {{"cost", ref.cost}, {"strength", -ref.neg_strength}}}}}});
}

HttpResponse CampaignService::history(Entry& entry) const {
  const auto c = entry.current();
  return json_response(200, {{"hv", c->hv_history()}});
}

struct HttpServer::Impl {
  CampaignService& service;
  httplib::Server server;

  explicit Impl(CampaignService& s) : service(s) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
      const auto r = service.handle(req.method, req.path, req.body);
      res.status = r.status;
      res.set_content(r.body, r.content_type);
    };
    server.Get(R"(/v1/.*)", forward);
    server.Post(R"(/v1/.*)", forward);
    server.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }
};

HttpServer::HttpServer(CampaignService& service) : impl_(std::make_unique<Impl>(service)) {}
HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }
void HttpServer::stop() { impl_->server.stop(); }
void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace mogp
