// Copyright 2026 The affreach Authors. All Rights Reserved.
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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

using nlohmann::json;

struct Invocation {
  int status = -1;
  std::string out;
  std::string err;
};

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "affreach_cli_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Invocation run(const std::string& args) {
  const std::string err_path = temp_path("stderr.txt");
  const std::string cmd =
      std::string("'") + AFFREACH_CLI + "' " + args + " 2>'" + err_path + "'";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_path);
  return r;
}

std::string instance(const std::string& name) {
  return std::string("'") + AFFREACH_INSTANCES + "/" + name + ".json'";
}

std::vector<json> records(const std::string& out) {
  std::vector<json> rs;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) rs.push_back(json::parse(line));
  }
  return rs;
}

json single(const Invocation& r) {
  const std::vector<json> rs = records(r.out);
  EXPECT_EQ(rs.size(), 1u) << r.out;
  return rs.empty() ? json() : rs.front();
}

std::string write_temp(const std::string& name, const json& j) {
  const std::string path = temp_path(name);
  std::ofstream(path) << j.dump();
  return path;
}

TEST(CliDecideTest, ReachableAndUnreachable) {
  const Invocation yes = run("decide " + instance("z_shift_reachable"));
  EXPECT_EQ(yes.status, 0);
  const json rec = single(yes);
  EXPECT_EQ(rec["reachable"], true);
  EXPECT_FALSE(rec.contains("witness"));
  EXPECT_TRUE(rec["case_trace"].is_array());
  for (const char* k : {"regex_nodes", "clauses", "elapsed_ms"}) {
    EXPECT_TRUE(rec["stats"].contains(k)) << k;
  }

  const Invocation no = run("decide " + instance("z_shift_unreachable"));
  EXPECT_EQ(no.status, 0);
  EXPECT_EQ(single(no)["reachable"], false);
}

TEST(CliDecideTest, WitnessAndTrace) {
  const Invocation r = run("decide --witness --trace " + instance("z_shift_reachable"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(single(r)["witness"], json::parse(R"([[1,"4"],[2,"3"]])"));
  EXPECT_NE(r.err.find("Z.3"), std::string::npos);
}

TEST(CliDecideTest, NaturalsInstances) {
  EXPECT_EQ(single(run("decide " + instance("n_down_shift_reachable")))["reachable"],
            true);
  EXPECT_EQ(single(run("decide " + instance("n_down_shift_parity")))["reachable"],
            false);
  EXPECT_EQ(single(run("decide " + instance("n_fixed_point")))["reachable"], false);
}

TEST(CliDecideTest, ResourceExceededExitsTwo) {
  const Invocation r = run("decide " + instance("z_modulus_12"));
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(single(r)["reachable"], "resource-exceeded");

  const Invocation capped =
      run("decide --max-regex-nodes 5 " + instance("z_two_involutions"));
  EXPECT_EQ(capped.status, 2);
  EXPECT_LE(single(capped)["stats"]["regex_nodes"].get<std::size_t>(), 5u);
}

TEST(CliDecideTest, UsageAndParseErrorsExitOne) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("decide /nonexistent/x.json").status, 1);
  const std::string bad = write_temp("bad.json", json{{"domain", "Z"}});
  const Invocation r = run("decide '" + bad + "'");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliCheckTest, GenuineAndTamperedWitnesses) {
  const std::string good = write_temp("good.json", json::parse(R"([[1,"4"],[2,"3"]])"));
  const Invocation ok = run("check " + instance("z_shift_reachable") + " '" + good + "'");
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(single(ok)["verified"], true);

  const std::string bad = write_temp("tampered.json", json::parse(R"([[1,"4"],[2,"2"]])"));
  const Invocation tampered =
      run("check " + instance("z_shift_reachable") + " '" + bad + "'");
  EXPECT_EQ(tampered.status, 0);
  const json rec = single(tampered);
  EXPECT_EQ(rec["verified"], false);
  EXPECT_TRUE(rec.contains("reason"));

  const std::string oob = write_temp("oob.json", json::parse(R"([[9,"1"]])"));
  const Invocation out_of_range =
      run("check " + instance("z_shift_reachable") + " '" + oob + "'");
  EXPECT_EQ(out_of_range.status, 0);
  EXPECT_EQ(single(out_of_range)["verified"], false);
}

TEST(CliCheckTest, EveryEmittedWitnessRoundTrips) {
  const Invocation batch = run("batch --witness '" + std::string(AFFREACH_INSTANCES) + "'");
  std::size_t checked = 0;
  for (const json& rec : records(batch.out)) {
    if (!rec.contains("witness") || rec["witness"].is_null()) continue;
    const std::string w = write_temp("roundtrip.json", rec["witness"]);
    const std::string file = rec["file"].get<std::string>();
    const Invocation r = run("check '" + std::string(AFFREACH_INSTANCES) + "/" + file +
                      "' '" + w + "'");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(single(r)["verified"], true) << file;
    ++checked;
  }
  EXPECT_GE(checked, 6u);
}

TEST(CliOracleTest, ShortestPath) {
  const Invocation r = run("oracle " + instance("z_shift_reachable") +
                    " --value-bound 1000 --depth-bound 20");
  EXPECT_EQ(r.status, 0);
  const json rec = single(r);
  EXPECT_EQ(rec["found"], true);
  EXPECT_EQ(rec["length"], 6);

  const Invocation miss = run("oracle " + instance("z_shift_unreachable") +
                       " --value-bound 1000 --depth-bound 20");
  EXPECT_EQ(single(miss)["found"], false);
}

TEST(CliBatchTest, OneRecordPerFileAndDeterministic) {
  const std::string dir = std::string("'") + AFFREACH_INSTANCES + "'";
  const Invocation a = run("batch --witness " + dir);
  const Invocation b = run("batch --witness " + dir);
  EXPECT_EQ(a.status, 2);  // z_modulus_12 exceeds the default budget
  std::vector<json> ra = records(a.out);
  std::vector<json> rb = records(b.out);
  ASSERT_EQ(ra.size(), 12u);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    ra[i]["stats"].erase("elapsed_ms");
    rb[i]["stats"].erase("elapsed_ms");
    EXPECT_EQ(ra[i], rb[i]);
  }
  EXPECT_TRUE(std::is_sorted(ra.begin(), ra.end(), [](const json& l, const json& r) {
    return l["file"].get<std::string>() < r["file"].get<std::string>();
  }));
}

}  // namespace
