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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mogp/cli.hpp"
#include "mogp/records.hpp"
#include "mogp/simulator.hpp"

using namespace mogp;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("mogp_test_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({"run", "--budget", "19", "--init", "20"}).code == kExitUsage);
  CHECK(cli({"benchmark", "--algos", "simplex", "--out", scratch("algo").string()}).code == kExitUsage);
  CHECK(cli({"suggest"}).code == kExitUsage);
}

TEST_CASE("missing files exit with 4") {
  const auto dir = scratch("missing");
  CHECK(cli({"front", "--state", (dir / "none.json").string()}).code == kExitIo);
  write(dir / "broken.json", "{\"schema_version\": 1, \"sett");
  CHECK(cli({"front", "--state", (dir / "broken.json").string()}).code == kExitIo);
}

TEST_CASE("suggest and tell drive a campaign through its phases") {
  const auto dir = scratch("asktell");
  const auto state = (dir / "c.json").string();
  const std::vector<std::string> budget{"--budget", "6", "--init", "4", "--reps", "2", "--seed", "3"};
  auto suggest = [&] {
    std::vector<std::string> args{"suggest", "--state", state};
    args.insert(args.end(), budget.begin(), budget.end());
    return cli(args);
  };
  Simulator sim(SimulatorSettings{.seed = 3});
  auto tell = [&](const std::string& record, int r) {
    const auto c = parse_configuration(record, DesignSpace::bonding());
    write(dir / "o.csv", format_outcomes_csv(sim.evaluate(c, r)));
    return cli({"tell", "--state", state, "--config", record, "--outcomes", (dir / "o.csv").string()});
  };

  auto first = suggest();
  REQUIRE(first.code == kExitOk);
  // Idempotent until told.
  CHECK(suggest().out == first.out);
  const auto wrong = tell(trim(first.out), 4);
  CHECK(wrong.code == kExitUsage);
  CHECK(wrong.err.find("expected 2") != std::string::npos);

  for (int i = 0; i < 4; ++i) {
    const auto s = suggest();
    REQUIRE(s.code == kExitOk);
    const auto t = tell(trim(s.out), 2);
    REQUIRE(t.code == kExitOk);
    CHECK(t.out.find("pf=") == 0);
  }
  for (int i = 0; i < 2; ++i) {
    const auto s = suggest();
    REQUIRE(s.code == kExitOk);
    CHECK(suggest().out == s.out);
    CHECK(tell(trim(s.out), 2).code == kExitOk);
  }
  CHECK(suggest().code == kExitState);
  const auto front = cli({"front", "--state", state});
  CHECK(front.code == kExitOk);
  CHECK(front.out.rfind("kind,", 0) == 0);
}

TEST_CASE("suggest during design prints a design point") {
  const auto dir = scratch("design");
  const auto state = (dir / "c.json").string();
  REQUIRE(cli({"suggest", "--state", state, "--budget", "6", "--init", "4"}).code == kExitOk);
  REQUIRE(fs::exists(state));
  CHECK(cli({"tell", "--state", state, "--config", "v1=0,v2=300,v3=5,v4=0.2,v5=1,v6=1", "--outcomes",
             (dir / "none.csv").string()})
            .code == kExitIo);
}

TEST_CASE("run output is deterministic for a seed") {
  const auto dir = scratch("run");
  const std::vector<std::string> args{"run", "--budget", "10", "--init", "6", "--reps", "2", "--seed", "9"};
  auto a = args, b = args;
  a.insert(a.end(), {"--out", (dir / "a.csv").string()});
  b.insert(b.end(), {"--out", (dir / "b.csv").string()});
  const auto ra = cli(a);
  REQUIRE(ra.code == kExitOk);
  CHECK(ra.out.find("configurations=10 outcomes=20") == 0);
  REQUIRE(cli(b).code == kExitOk);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK_FALSE(slurp(dir / "a.csv").empty());
}

TEST_CASE("benchmark writes its output files") {
  const auto dir = scratch("bench");
  const auto r = cli({"benchmark", "--algos", "random,nsga2", "--macro-reps", "2", "--gamma", "0.3", "--budget", "8",
                      "--init", "4", "--reps", "2", "--reference-points", "100", "--out", dir.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(fs::exists(dir / "curves.csv"));
  CHECK(fs::exists(dir / "summary.csv"));
  CHECK(fs::exists(dir / "reference_front.csv"));
  CHECK(fs::exists(dir / "fronts"));
  int fronts = 0;
  for (const auto& e : fs::directory_iterator(dir / "fronts")) fronts += e.is_regular_file();
  CHECK(fronts == 4);

  const auto analyzed = cli({"analyze-inputs", "--fronts", (dir / "reference_front.csv").string()});
  CHECK(analyzed.code == kExitOk);
  CHECK_FALSE(analyzed.out.empty());
}

TEST_CASE("reference front command writes a CSV") {
  const auto r = cli({"reference-front", "--n", "100", "--reps", "1"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("kind,v1,v2,v3,v4,v5,v6", 0) == 0);
}

TEST_CASE("installed binary matches the in-process entry point") {
  const auto dir = scratch("binary");
  const std::string cmd = std::string(MOGP_CLI_PATH) + " run --budget 8 --init 4 --reps 2 --seed 2 --out " +
                          (dir / "x.csv").string() + " > " + (dir / "stdout.txt").string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  REQUIRE(cli({"run", "--budget", "8", "--init", "4", "--reps", "2", "--seed", "2", "--out", (dir / "y.csv").string()})
              .code == kExitOk);
  CHECK(slurp(dir / "x.csv") == slurp(dir / "y.csv"));
  CHECK(std::system((std::string(MOGP_CLI_PATH) + " bogus > /dev/null 2>&1").c_str()) != 0);
}
