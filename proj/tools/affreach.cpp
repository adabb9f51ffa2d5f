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

// affreach: command-line front end for the reachability solver.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affreach/affreach.hpp"
#include "affreach/io.hpp"
#include "affreach/selftest.hpp"

namespace {

using affreach::io::json;

constexpr int kDecided = 0;
constexpr int kUsageError = 1;
constexpr int kResourceExceeded = 2;

struct DecideFlags {
  bool witness = false;
  std::size_t max_regex_nodes = 1'000'000;
  bool trace = false;
};

void emit(const json& record) { std::cout << record.dump() << std::endl; }

// Decides one instance; returns the record and the exit status it implies.
std::pair<json, int> decide_one(const affreach::AffineSystem& sys,
                                const DecideFlags& flags) {
  affreach::SolverOptions options;
  options.max_regex_nodes = flags.max_regex_nodes;
  options.want_witness = flags.witness;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  };
  try {
    const affreach::Verdict v = affreach::decide(sys, options);
    if (flags.trace) {
      for (const std::string& line : affreach::io::trace_lines(v)) {
        std::cerr << "trace: " << line << "\n";
      }
    }
    if (flags.witness && v.witness_unavailable) {
      std::cerr << "warning: witness exceeds the configured caps\n";
    }
    return {affreach::io::result_record(sys, v, flags.witness, elapsed()),
            kDecided};
  } catch (const affreach::ResourceExceeded& e) {
    if (flags.trace) std::cerr << "trace: " << e.what() << "\n";
    return {affreach::io::resource_exceeded_record(e, elapsed()),
            kResourceExceeded};
  }
}

int run_decide(const std::string& file, const DecideFlags& flags) {
  const affreach::AffineSystem sys = affreach::io::load_instance(file);
  auto [record, status] = decide_one(sys, flags);
  emit(record);
  return status;
}

int run_check(const std::string& file, const std::string& witness_file) {
  const affreach::AffineSystem sys = affreach::io::load_instance(file);
  const json raw = affreach::io::read_json_file(witness_file);
  json record;
  try {
    const affreach::RLEWord w = affreach::io::parse_witness(sys, raw);
    const bool ok = affreach::check_witness(sys, w);
    record["verified"] = ok;
    if (!ok) {
      record["reason"] = sys.domain() == affreach::Domain::kNaturals
                             ? "orbit misses y or leaves the naturals"
                             : "orbit misses y";
    }
  } catch (const std::out_of_range& e) {
    record["verified"] = false;
    record["reason"] = e.what();
  }
  emit(record);
  return kDecided;
}

int run_oracle(const std::string& file, const std::string& value_bound,
               std::size_t depth_bound) {
  const affreach::AffineSystem sys = affreach::io::load_instance(file);
  const affreach::Int bound = affreach::io::parse_int(value_bound, "--value-bound");
  const affreach::OracleAnswer a =
      affreach::bfs_oracle(sys, bound, depth_bound);
  json record;
  record["found"] = a.found();
  if (a.found()) {
    record["length"] = a.path->size();
    record["path"] = affreach::io::witness_to_json(
        sys, affreach::RLEWord::from_word(*a.path));
  }
  emit(record);
  return kDecided;
}

int run_batch(const std::string& dir, const DecideFlags& flags) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  int status = kDecided;
  for (const auto& path : files) {
    try {
      const affreach::AffineSystem sys =
          affreach::io::load_instance(path.string());
      auto [record, s] = decide_one(sys, flags);
      record["file"] = path.filename().string();
      emit(record);
      if (s == kResourceExceeded && status == kDecided) status = s;
    } catch (const affreach::io::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      status = kUsageError;
    }
  }
  return status;
}

int run_selftest() {
  bool all = true;
  for (const auto& r : affreach::selftest::run_all()) {
    std::cout << affreach::selftest::format_line(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reachability for integer affine maps"};
  app.require_subcommand(1);

  DecideFlags flags;
  std::string file;
  std::string witness_file;
  std::string dir;
  std::string value_bound;
  std::size_t depth_bound = 0;

  auto add_decide_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--witness", flags.witness, "Include a witness word");
    cmd->add_option("--max-regex-nodes", flags.max_regex_nodes,
                    "Regular expression node cap")
        ->capture_default_str();
    cmd->add_flag("--trace", flags.trace, "Print the case trace to stderr");
  };

  CLI::App* decide = app.add_subcommand("decide", "Decide one instance");
  decide->add_option("file", file, "Instance file")->required();
  add_decide_flags(decide);

  CLI::App* check = app.add_subcommand("check", "Verify a witness");
  check->add_option("file", file, "Instance file")->required();
  check->add_option("witness-file", witness_file, "Witness file")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Bounded BFS search");
  oracle->add_option("file", file, "Instance file")->required();
  oracle->add_option("--value-bound", value_bound, "Largest |value| explored")
      ->required();
  oracle->add_option("--depth-bound", depth_bound, "Longest word explored")
      ->required();

  CLI::App* batch = app.add_subcommand("batch", "Decide every *.json in a directory");
  batch->add_option("dir", dir, "Directory")->required()->check(CLI::ExistingDirectory);
  add_decide_flags(batch);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the generator-backed suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (decide->parsed()) return run_decide(file, flags);
    if (check->parsed()) return run_check(file, witness_file);
    if (oracle->parsed()) return run_oracle(file, value_bound, depth_bound);
    if (batch->parsed()) return run_batch(dir, flags);
    if (selftest->parsed()) return run_selftest();
  } catch (const affreach::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
