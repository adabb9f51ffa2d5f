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

// JSON instance, witness and result formats. Integers travel as decimal
// strings (plain JSON integers are accepted on input).

#ifndef AFFREACH_IO_HPP_
#define AFFREACH_IO_HPP_

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "affreach/affine.hpp"
#include "affreach/errors.hpp"
#include "affreach/verdict.hpp"
#include "json.hpp"

namespace affreach::io {

using nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

inline Int parse_int(const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Int(j.get<std::uint64_t>())
                                  : Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (!is_decimal(s)) {
      throw ParseError(field + ": \"" + s + "\" is not a decimal integer");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Int(s);
  }
  throw ParseError(field + ": expected an integer, got " + j.dump());
}

inline AffineSystem parse_instance(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  for (const char* key : {"domain", "x", "y", "functions"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  }
  const json& d = j.at("domain");
  Domain domain;
  if (d == "Z") {
    domain = Domain::kIntegers;
  } else if (d == "N") {
    domain = Domain::kNaturals;
  } else {
    throw ParseError("domain must be \"Z\" or \"N\", got " + d.dump());
  }
  const json& fs = j.at("functions");
  if (!fs.is_array() || fs.empty()) {
    throw ParseError("functions must be a nonempty array");
  }
  std::vector<AffineMap> maps;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const json& f = fs[i];
    const std::string where = "functions[" + std::to_string(i) + "]";
    if (!f.is_array() || f.size() != 2) {
      throw ParseError(where + " must be a pair [a, b]");
    }
    maps.push_back({parse_int(f[0], where + ".a"), parse_int(f[1], where + ".b")});
  }
  Int x = parse_int(j.at("x"), "x");
  Int y = parse_int(j.at("y"), "y");
  if (domain == Domain::kNaturals && (x < 0 || y < 0)) {
    throw ParseError("x and y must be nonnegative over N");
  }
  return AffineSystem(std::move(maps), std::move(x), std::move(y), domain);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline AffineSystem load_instance(const std::string& path) {
  try {
    return parse_instance(read_json_file(path));
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + what);
  }
}

inline json instance_to_json(const AffineSystem& sys) {
  json fs = json::array();
  for (const AffineMap& f : sys.maps()) fs.push_back({f.a.str(), f.b.str()});
  return {{"domain", sys.domain() == Domain::kIntegers ? "Z" : "N"},
          {"x", sys.x().str()},
          {"y", sys.y().str()},
          {"functions", fs}};
}

// Witness runs as [[position, "count"], ...] with positions into the
// instance file's function list.
inline json witness_to_json(const AffineSystem& sys, const RLEWord& w) {
  json out = json::array();
  for (const Run& r : w.runs) {
    out.push_back({sys.input_position(r.index), r.count.str()});
  }
  return out;
}

// Accepts a bare run array or an object with a "witness" field. Runs may
// name any input position, including duplicates of an earlier function.
// Positions outside the function list are reported through out_of_range.
inline RLEWord parse_witness(const AffineSystem& sys, const json& j) {
  const json& runs = j.is_object() && j.contains("witness") ? j.at("witness") : j;
  if (!runs.is_array()) throw ParseError("witness must be an array of runs");
  RLEWord w;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const json& r = runs[i];
    const std::string where = "witness[" + std::to_string(i) + "]";
    if (!r.is_array() || r.size() != 2) {
      throw ParseError(where + " must be a pair [index, count]");
    }
    const Int pos = parse_int(r[0], where + ".index");
    const Int count = parse_int(r[1], where + ".count");
    if (count < 0) throw ParseError(where + ".count is negative");
    if (pos < 1 || pos > Int(sys.input_size())) {
      throw std::out_of_range(where + ".index " + pos.str() +
                              " is not a function position");
    }
    w.push_back(sys.index_of_input(static_cast<MapIndex>(pos)), count);
  }
  return w;
}

inline std::vector<std::string> trace_lines(const Verdict& v) {
  std::vector<std::string> out;
  for (const TraceEntry& t : v.trace) out.push_back(t.label + ": " + t.summary);
  return out;
}

// The record for one decision. The witness, if any, is re-verified first.
inline json result_record(const AffineSystem& sys, const Verdict& v,
                          bool with_witness, double elapsed_ms) {
  json rec;
  rec["reachable"] = v.reachable;
  if (with_witness && v.reachable) {
    if (v.witness) {
      if (!check_witness(sys, *v.witness)) {
        throw std::logic_error("witness fails verification");
      }
      rec["witness"] = witness_to_json(sys, *v.witness);
    } else {
      rec["witness"] = nullptr;
    }
  }
  rec["case_trace"] = trace_lines(v);
  rec["stats"] = {{"regex_nodes", v.stats.peak_regex_nodes},
                  {"clauses", v.stats.clauses},
                  {"elapsed_ms", elapsed_ms}};
  return rec;
}

inline json resource_exceeded_record(const ResourceExceeded& e,
                                     double elapsed_ms) {
  return {{"reachable", "resource-exceeded"},
          {"case_trace", json::array({std::string(e.what())})},
          {"stats",
           {{"regex_nodes", e.peak()}, {"clauses", 0}, {"elapsed_ms", elapsed_ms}}}};
}

}  // namespace affreach::io

#endif  // AFFREACH_IO_HPP_
