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

#ifndef AFFREACH_VERDICT_HPP_
#define AFFREACH_VERDICT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "affreach/affine.hpp"

namespace affreach {

// Resource caps shared by every decision procedure.
struct SolverOptions {
  std::size_t max_regex_nodes = 1'000'000;
  std::size_t max_search_vertices = 1'000'000;
  std::size_t max_automaton_states = 100'000;
  std::size_t max_witness_runs = 1'000'000;
  bool want_witness = true;
};

struct TraceEntry {
  std::string label;
  std::string summary;
};

struct SolverStats {
  std::size_t peak_regex_nodes = 0;
  std::size_t clauses = 0;
};

struct Verdict {
  bool reachable = false;
  // Absent when unreachable, when not requested, or when reconstruction hit
  // a cap (witness_unavailable is then set).
  std::optional<RLEWord> witness;
  bool witness_unavailable = false;
  std::vector<TraceEntry> trace;
  SolverStats stats;
};

}  // namespace affreach

#endif  // AFFREACH_VERDICT_HPP_
