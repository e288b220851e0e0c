// Copyright 2026 The gapforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("gapforge_cli_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Invocation run(const std::string& args) {
  const std::string err_path = temp_file("stderr");
  const std::string cmd =
      std::string(GAPFORGE_CLI_PATH) + " " + args + " 2>" + err_path;
  Invocation r{};
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return r;
}

TEST(Cli, Version) {
  Invocation r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.1.0"), std::string::npos);
}

TEST(Cli, ConstantsJson) {
  Invocation r = run("constants --d 2 --eps0 0.1");
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("config").at("command"), "constants");
  EXPECT_EQ(doc.at("result").at("t0"), 1559);
  EXPECT_NEAR(doc.at("result").at("alpha").get<double>(), 5.15e-3, 5e-6);
  EXPECT_NEAR(doc.at("result").at("beta").get<double>(), 0.3927, 1e-4);
}

TEST(Cli, TableCsv) {
  Invocation r = run("constants --table --dims 2,3 --format csv");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "d,eps0,t0,alpha,beta");
  EXPECT_NE(r.out.find("3,0.05,10166,1.65e-02,0.251"), std::string::npos);
  EXPECT_NE(r.out.find("2,0.25,509,0.00e+00,0.393"), std::string::npos);
  EXPECT_EQ(r.out.find("\n4,"), std::string::npos);
}

TEST(Cli, Weights) {
  Invocation r = run("weights --d 3 --t 2 --count-only");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("result").at("count"), 5);
  Invocation full = run("weights --d 2 --t 3 --nontrivial");
  ASSERT_EQ(full.code, 0);
  EXPECT_EQ(json::parse(full.out).at("result").size(), 3u);
}

TEST(Cli, GapPipeline) {
  const std::string gates = temp_file("gates.json");
  ASSERT_EQ(run("random-gates --d 2 --k 2 --seed 7 -o " + gates).code, 0);
  Invocation r = run("gap --gates " + gates + " --t 10 --per-irrep --threads 2");
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_NEAR(doc.at("result").at("gap").get<double>(), 0.052486792971637941,
              1e-12);
  EXPECT_EQ(doc.at("result").at("per_weight_norms").size(), 10u);
  // Progress is NDJSON on stderr, one event per block.
  std::istringstream lines(r.err);
  std::string line;
  int blocks = 0;
  while (std::getline(lines, line)) {
    json ev = json::parse(line);
    if (ev.at("event") == "block") ++blocks;
  }
  EXPECT_EQ(blocks, 10);
  Invocation quiet = run("gap --gates " + gates + " --t 4 --quiet");
  EXPECT_EQ(quiet.code, 0);
  EXPECT_TRUE(quiet.err.empty());
  const std::string out = temp_file("out.json");
  ASSERT_EQ(run("gap --gates " + gates + " --t 4 -q -o " + out).code, 0);
  EXPECT_NEAR(json::parse(slurp(out)).at("result").at("gap").get<double>(),
              0.087286702722402909, 1e-12);
  Invocation g0 = run("gtzero --gates " + gates + " --eps0 0.25 --t-override 20 -q");
  ASSERT_EQ(g0.code, 0) << g0.err;
  EXPECT_NEAR(json::parse(g0.out).at("result").at("g_t0").get<double>(),
              2.6428848271763716e-06, 1e-11);
  Invocation b = run("bound --gates " + gates +
              " --eps0 0.1 --t-override 20 --t 600 --t 6000 --format csv -q");
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(std::count(b.out.begin(), b.out.end(), '\n'), 3);
  std::filesystem::remove(gates);
  std::filesystem::remove(out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("gap --gates /nonexistent.json --t 3").code, 1);
  EXPECT_EQ(run("gap --t 3").code, 2);
  EXPECT_EQ(run("constants --d 2 --eps0 0.3").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  const std::string gates = temp_file("cap.json");
  ASSERT_EQ(run("random-gates --d 2 --k 2 --seed 1 -o " + gates).code, 0);
  Invocation r = run("--dimension-cap 10 gap --gates " + gates + " --t 30 -q");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
  std::filesystem::remove(gates);
}

TEST(Cli, NetLength) {
  Invocation r = run("net-length --d 2 --eps 0.01 --gap 0.1 --variant thm2");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out).at("result").at("length").get<double>(),
              30 * std::log(100.0) - 30 * std::log(4.75), 1e-9);
  Invocation s = run("net-length --d 2 --eps 0.1 --gap-t 0.5 --variant scale");
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(json::parse(s.out).at("result").at("required_t"), 1559);
}

}  // namespace
