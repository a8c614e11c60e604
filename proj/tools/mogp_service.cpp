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

// Campaign service entry point. Flags win over the environment:
//   --host / MOGP_HOST (default 127.0.0.1)
//   --port / MOGP_PORT (default 8080)
//   --state-dir / MOGP_STATE_DIR (default ./campaigns)

#include <CLI11.hpp>

#include <csignal>
#include <cstdlib>
#include <iostream>

#include "mogp/service.hpp"

namespace {
mogp::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}
}  // namespace

int main(int argc, char** argv) {
  std::string host = env_or("MOGP_HOST", "127.0.0.1");
  int port = std::atoi(env_or("MOGP_PORT", "8080").c_str());
  std::string state_dir = env_or("MOGP_STATE_DIR", "campaigns");

  CLI::App app{"HTTP campaign service", "mogp_service"};
  app.add_option("--host", host, "Listen address")->capture_default_str();
  app.add_option("--port", port, "Listen port (0 picks a free port)")->capture_default_str();
  app.add_option("--state-dir", state_dir, "Directory for persisted campaigns")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    mogp::CampaignService service(state_dir);
    mogp::HttpServer server(service);
    const int bound = server.bind(host, port);
    if (bound < 0) {
      std::cerr << "error: cannot bind " << host << ":" << port << '\n';
      return 4;
    }
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cout << "listening on http://" << host << ":" << bound << "/v1 (state in " << state_dir << ")" << std::endl;
    server.listen();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
