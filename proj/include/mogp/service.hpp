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

// HTTP campaign service for the lab web UI. All endpoints live under /v1 and
// exchange JSON with the same field names as the key=value records:
//
//   POST /v1/campaigns                        settings -> 201 {id, design}
//   GET  /v1/campaigns                        ids
//   GET  /v1/campaigns/{id}                   phase, counters, space, pending work
//   GET  /v1/campaigns/{id}/suggestion        200 config | 409 design incomplete | 410 exhausted
//   POST /v1/campaigns/{id}/observations      {config, outcomes} -> 200 summary | 409 | 422
//   GET  /v1/campaigns/{id}/front             front in minimization and display space
//   GET  /v1/campaigns/{id}/history           HV after each told configuration
//
// Every mutation is applied to a copy, persisted, and only then published,
// so an acknowledged observation is always on disk.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "mogp/campaign.hpp"

namespace mogp {

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

class CampaignService {
 public:
  /// With a state directory, campaigns are persisted as <dir>/<id>.json and
  /// any existing documents are loaded.
  explicit CampaignService(std::optional<std::filesystem::path> state_dir = std::nullopt);
  ~CampaignService();

  CampaignService(const CampaignService&) = delete;
  CampaignService& operator=(const CampaignService&) = delete;

  HttpResponse handle(std::string_view method, std::string_view path, std::string_view body);

  std::vector<std::string> ids() const;

 private:
  struct Entry;

  HttpResponse create(std::string_view body);
  HttpResponse describe(Entry& entry) const;
  HttpResponse suggestion(Entry& entry);
  HttpResponse observe(Entry& entry, std::string_view body);
  HttpResponse front(Entry& entry) const;
  HttpResponse history(Entry& entry) const;

  Entry* find(const std::string& id) const;
  void persist(const std::string& id, const Campaign& campaign) const;
  std::string new_id();

  std::optional<std::filesystem::path> state_dir_;
  mutable std::shared_mutex registry_mutex_;
  std::map<std::string, std::unique_ptr<Entry>> campaigns_;
  std::uint64_t id_counter_ = 0;
  std::uint64_t id_salt_ = 0;
};

/// Serves a CampaignService over HTTP (permissive CORS for the browser UI).
class HttpServer {
 public:
  explicit HttpServer(CampaignService& service);
  ~HttpServer();

  /// Returns the bound port (port 0 picks a free one); -1 on failure.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mogp
