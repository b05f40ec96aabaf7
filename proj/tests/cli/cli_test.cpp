// Copyright 2026 The Multiunit Pricing Authors.
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

// End-to-end checks of the command-line tool as a subprocess. The binary
// path and the data directory are injected at compile time by the build.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout only; stderr is discarded
};

CmdResult run_cmd(const std::string& cmd) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

const std::string kCli = "'" MULTIUNIT_CLI_PATH "'";
const std::string kData = MULTIUNIT_DATA_DIR;

std::string data_file(const std::string& name) {
  return "'" + kData + "/" + name + "'";
}

}  // namespace

TEST_CASE("check-dmr classifies the uniform instance") {
  const CmdResult r =
      run_cmd(kCli + " check-dmr --instance " + data_file("uniform_k2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"all_dmr\": true") != std::string::npos);
  CHECK(r.output.find("\"uniform\"") != std::string::npos);
  CHECK(r.output.find("\"instance_digest\"") != std::string::npos);
}

TEST_CASE("revenue reports the closed form and the integration cross-check") {
  const CmdResult r = run_cmd(kCli + " revenue --instance " +
                              data_file("uniform_k2.json") + " --prices 0.4,0.7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"revenue\": 0.3475") != std::string::npos);
  CHECK(r.output.find("\"integration\"") != std::string::npos);
}

TEST_CASE("oracle reproduces the frozen discrete example") {
  const CmdResult r =
      run_cmd(kCli + " oracle --instance " + data_file("example_discrete.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"revenue\": 2.5") != std::string::npos);
  CHECK(r.output.find("2.333333333333333") != std::string::npos);
  CHECK(r.output.find("\"gap\"") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  SUBCASE("revenue without a menu") {
    const CmdResult r =
        run_cmd(kCli + " revenue --instance " + data_file("uniform_k2.json"));
    CHECK(r.exit_code == 2);
  }
  SUBCASE("nonexistent instance file") {
    const CmdResult r =
        run_cmd(kCli + " check-dmr --instance " + data_file("no_such_file.json"));
    CHECK(r.exit_code == 2);
  }
  SUBCASE("unknown strategy name") {
    const CmdResult r =
        run_cmd(kCli + " simulate --instance " + data_file("uniform_k2.json") +
                " --strategy bogus");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("discrete subcommand on a continuous-only file") {
    const CmdResult r =
        run_cmd(kCli + " oracle --instance " + data_file("uniform_k2.json"));
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("reports are byte-identical across identical runs") {
  const std::string cmd =
      kCli + " optimize --instance " + data_file("uniform_k2.json") + " --k2";
  const CmdResult a = run_cmd(cmd);
  const CmdResult b = run_cmd(cmd);
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(!a.output.empty());
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"method\": \"k2\"") != std::string::npos);
}

TEST_CASE("simulate writes a per-round csv trace") {
  const std::string trace_path = "multiunit_cli_trace_tmp.csv";
  const CmdResult r = run_cmd(
      kCli + " simulate --instance " + data_file("uniform_k2.json") +
      " --strategy fixed --prices 0.5,1.0 --rounds 50 --seed 7 --trace '" +
      trace_path + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"strategy\": \"fixed\"") != std::string::npos);
  std::ifstream in(trace_path);
  REQUIRE(in.good());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "round,p_1,p_2,bundle,revenue");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 50);
  in.close();
  std::remove(trace_path.c_str());
}

TEST_CASE("environment variables can stand in for flags") {
  const CmdResult r = run_cmd("MULTIUNIT_PRICES=0.4,0.7 " + kCli +
                              " revenue --instance " + data_file("uniform_k2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"revenue\": 0.3475") != std::string::npos);
}

TEST_CASE("--out redirects the report to a file") {
  const std::string out_path = "multiunit_cli_report_tmp.json";
  const CmdResult r = run_cmd(kCli + " optimize --instance " +
                              data_file("uniform_k2.json") + " --k2 --out '" +
                              out_path + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(out_path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"revenue\": 0.375") != std::string::npos);
  in.close();
  std::remove(out_path.c_str());
}
