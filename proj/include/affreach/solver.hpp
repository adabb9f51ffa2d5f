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

// Top-level decision procedures for reachability under a finite set of
// integer affine maps, over Z and over N, with certificate extraction.

#ifndef AFFREACH_SOLVER_HPP_
#define AFFREACH_SOLVER_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affreach/affine.hpp"
#include "affreach/errors.hpp"
#include "affreach/interval_solver.hpp"
#include "affreach/mod_automaton.hpp"
#include "affreach/monotone.hpp"
#include "affreach/regex.hpp"
#include "affreach/verdict.hpp"

namespace affreach {

namespace internal {

struct SubSystem {
  AffineSystem sys;
  std::vector<MapIndex> to_parent;  // to_parent[i - 1] is the parent index
};

inline SubSystem without_map(const AffineSystem& sys, MapIndex j) {
  std::vector<AffineMap> maps;
  std::vector<MapIndex> to_parent;
  for (MapIndex i = 1; i <= sys.size(); ++i) {
    if (i == j) continue;
    maps.push_back(sys.map(i));
    to_parent.push_back(i);
  }
  return {AffineSystem(std::move(maps), sys.x(), sys.y(), sys.domain()),
          std::move(to_parent)};
}

inline RLEWord lift(const RLEWord& w, const std::vector<MapIndex>& to_parent) {
  RLEWord out;
  for (const Run& r : w.runs) out.append(to_parent.at(r.index - 1), r.count);
  return out;
}

inline std::string describe(const AffineSystem& sys) {
  std::ostringstream os;
  os << domain_name(sys.domain()) << " x=" << sys.x() << " y=" << sys.y()
     << " F={";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (i) os << ",";
    os << sys.maps()[i];
  }
  os << "}";
  return os.str();
}

inline std::string memo_key(const AffineSystem& sys) {
  return describe(sys);
}

template <typename Pred>
std::optional<MapIndex> first_map(const AffineSystem& sys, Pred pred) {
  for (MapIndex i = 1; i <= sys.size(); ++i) {
    if (pred(sys.map(i))) return i;
  }
  return std::nullopt;
}

inline int sign(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Shortest word accepted by the congruence automaton that uses at least one
// map with a negative coefficient.
inline std::optional<Word> negative_word(const ModAutomaton& aut,
                                         const AffineSystem& sys) {
  const std::size_t m = aut.modulus;
  std::vector<std::pair<std::size_t, MapIndex>> parent(2 * m,
                                                       {SIZE_MAX, 0});
  std::vector<bool> seen(2 * m, false);
  const std::size_t root = aut.start;
  std::deque<std::size_t> q{root};
  seen[root] = true;
  const std::size_t goal = m + aut.accept;
  while (!q.empty()) {
    const std::size_t node = q.front();
    q.pop_front();
    if (node == goal) break;
    const std::size_t state = node % m;
    const bool used = node >= m;
    for (MapIndex i = 1; i <= sys.size(); ++i) {
      const std::size_t nxt =
          aut.step(state, i) + ((used || sys.map(i).a < 0) ? m : 0);
      if (seen[nxt]) continue;
      seen[nxt] = true;
      parent[nxt] = {node, i};
      q.push_back(nxt);
    }
  }
  if (!seen[goal]) return std::nullopt;
  Word w;
  for (std::size_t node = goal; node != root; node = parent[node].first) {
    w.push_back(parent[node].second);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace internal

// Decides reachability. One Solver memoizes sub-instances across the
// recursion of a single top-level call; reuse across calls is allowed.
class Solver {
 public:
  explicit Solver(SolverOptions options = {}) : options_(options) {}

  const SolverOptions& options() const { return options_; }
  const SolverStats& stats() const { return stats_; }

  Verdict decide(const AffineSystem& sys) {
    Verdict v = sys.domain() == Domain::kIntegers ? decide_z_rec(sys)
                                                  : decide_n_rec(sys);
    v.stats = stats_;
    if (v.witness && !check_witness(sys, *v.witness)) {
      throw std::logic_error("internal error: witness fails verification for " +
                             internal::describe(sys));
    }
    return v;
  }

 private:
  template <typename Fn>
  void build_witness(Verdict& v, Fn&& fn) {
    if (!v.reachable || !options_.want_witness) return;
    try {
      v.witness = fn();
      if (v.witness && v.witness->runs.size() > options_.max_witness_runs) {
        throw WitnessUnavailable("witness longer than the run cap");
      }
    } catch (const WitnessUnavailable&) {
      v.witness.reset();
      v.witness_unavailable = true;
    } catch (const ResourceExceeded&) {
      v.witness.reset();
      v.witness_unavailable = true;
    }
  }

  // Witness of a child verdict, or WitnessUnavailable.
  static const RLEWord& child_witness(const Verdict& v) {
    if (!v.witness) throw WitnessUnavailable("sub-instance has no witness");
    return *v.witness;
  }

  static void adopt_trace(Verdict& parent, const Verdict& child) {
    parent.trace.insert(parent.trace.end(), child.trace.begin(),
                        child.trace.end());
  }

  void note_report(const ModExtremumReport& rep) {
    stats_.peak_regex_nodes =
        std::max(stats_.peak_regex_nodes, rep.peak_regex_nodes);
    stats_.clauses += rep.clauses.size();
  }

  static Verdict trivial(const AffineSystem& sys) {
    Verdict v;
    if (sys.x() == sys.y()) {
      v.reachable = true;
      v.witness = RLEWord{};
      v.trace.push_back({"x=y", internal::describe(sys)});
    } else {
      v.trace.push_back({"no maps", internal::describe(sys)});
    }
    return v;
  }

  // ---- over Z ------------------------------------------------------------

  Verdict decide_z_rec(const AffineSystem& sys) {
    const std::string key = internal::memo_key(sys);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Verdict v = decide_z_uncached(sys);
    memo_.emplace(key, v);
    return v;
  }

  Verdict decide_z_uncached(const AffineSystem& sys) {
    if (sys.x() == sys.y() || sys.empty()) return trivial(sys);
    const std::string desc = internal::describe(sys);

    if (auto j = internal::first_map(sys, [](const AffineMap& f) {
          return f.a == 0;
        })) {
      Verdict v;
      v.trace.push_back({"Z.1 constant map " + std::to_string(*j), desc});
      auto sub = internal::without_map(sys, *j);
      Verdict direct = decide_z_rec(sub.sys);
      adopt_trace(v, direct);
      if (direct.reachable) {
        v.reachable = true;
        build_witness(v, [&] { return internal::lift(child_witness(direct),
                                                     sub.to_parent); });
        return v;
      }
      const Int& bj = sys.map(*j).b;
      Verdict via = decide_z_rec(sub.sys.with_endpoints(bj, sys.y()));
      adopt_trace(v, via);
      v.reachable = via.reachable;
      build_witness(v, [&] {
        RLEWord w;
        w.append(*j, 1);
        w.append(internal::lift(child_witness(via), sub.to_parent));
        return w;
      });
      return v;
    }

    if (auto j = internal::first_map(
            sys, [](const AffineMap& f) { return f.is_identity(); })) {
      Verdict v;
      v.trace.push_back({"Z.2 identity map " + std::to_string(*j), desc});
      auto sub = internal::without_map(sys, *j);
      Verdict child = decide_z_rec(sub.sys);
      adopt_trace(v, child);
      v.reachable = child.reachable;
      build_witness(v, [&] {
        return internal::lift(child_witness(child), sub.to_parent);
      });
      return v;
    }

    if (auto j = internal::first_map(
            sys, [](const AffineMap& f) { return f.is_shift(); })) {
      return decide_shift_z(sys, *j, desc);
    }

    std::vector<MapIndex> involutions;
    for (MapIndex i = 1; i <= sys.size(); ++i) {
      if (sys.map(i).a == -1) involutions.push_back(i);
    }
    if (involutions.size() == 1) {
      Verdict v = decide_expanding_z(sys, involutions.front(), options_);
      v.trace.insert(v.trace.begin(),
                     {"Z.4 one involution " +
                          std::to_string(involutions.front()),
                      desc});
      return v;
    }
    if (involutions.size() >= 2) {
      return decide_two_involutions_z(sys, involutions[0], involutions[1],
                                      desc);
    }
    Verdict v = decide_expanding_z(sys, std::nullopt, options_);
    v.trace.insert(v.trace.begin(), {"Z.6 all expanding", desc});
    return v;
  }

  // A shift g(z) = z + k is present. Every F-composition is an
  // (F \ {g})-composition plus a multiple of k, so the question reduces to
  // the extremum of values congruent to y mod k.
  Verdict decide_shift_z(const AffineSystem& sys, MapIndex j,
                         const std::string& desc) {
    const Int k = sys.map(j).b;
    const ExtremumMode mode = k < 0 ? ExtremumMode::kSup : ExtremumMode::kInf;
    auto sub = internal::without_map(sys, j);
    ModExtremumReport rep =
        analyze_mod_extremum(sub.sys, k, mode, false, options_);
    note_report(rep);

    Verdict v;
    const std::string head = "Z.3 shift " + std::to_string(j) +
                             " k=" + k.str() + " " +
                             (mode == ExtremumMode::kSup ? "sup" : "inf");
    switch (rep.result.kind()) {
      case ModExtremumResult::Kind::kEmpty:
        v.trace.push_back({head + ": Empty (A)", desc});
        return v;
      case ModExtremumResult::Kind::kNegative:
        v.trace.push_back({head + ": Negative (C)", desc});
        v.reachable = true;
        build_witness(v, [&] {
          return negative_shift_witness(sub, rep.automaton, j, k);
        });
        return v;
      case ModExtremumResult::Kind::kValue:
        break;
    }
    const ExtInt& value = rep.result.value();
    v.reachable = mode == ExtremumMode::kSup ? value >= ExtInt(sys.y())
                                             : value <= ExtInt(sys.y());
    v.trace.push_back({head + ": " + rep.result.str() +
                           (v.reachable ? " (B)" : " (D)"),
                       desc});
    build_witness(v, [&] {
      return value_shift_witness(sub, rep, j, k, mode, false);
    });
    return v;
  }

  // A composition s congruent to y carrying a negative map: pump g just
  // before the last negative map until the sign of s(x) - y flips, then
  // close the gap with trailing copies of g.
  RLEWord negative_shift_witness(const internal::SubSystem& sub,
                                 const ModAutomaton& aut, MapIndex j,
                                 const Int& k) {
    std::optional<Word> s = internal::negative_word(aut, sub.sys);
    if (!s) throw std::logic_error("no negative word despite Negative");
    const Int& x = sub.sys.x();
    const Int& y = sub.sys.y();
    const Int v0 = apply_word(sub.sys, *s, x).value;
    std::size_t last_neg = 0;
    for (std::size_t p = 0; p < s->size(); ++p) {
      if (sub.sys.map((*s)[p]).a < 0) last_neg = p;
    }
    Int c = 1;
    for (std::size_t p = last_neg; p < s->size(); ++p) {
      c *= sub.sys.map((*s)[p]).a;
    }
    Int inner = 0;
    const Int d = v0 - y;
    if (internal::sign(d) == internal::sign(k)) {
      const Int step = abs(c * k);
      inner = (abs(d) + step - 1) / step;
    }
    const Int v1 = v0 + c * inner * k;
    const Int outer = (y - v1) / k;
    if (outer < 0 || v1 + outer * k != y) {
      throw std::logic_error("negative-case witness arithmetic failed");
    }
    RLEWord w;
    for (std::size_t p = 0; p < s->size(); ++p) {
      if (p == last_neg) w.append(j, inner);
      w.append(sub.to_parent[(*s)[p] - 1], 1);
    }
    w.append(j, outer);
    return w;
  }

  // The first clause whose extremum clears y yields a word s with s(x) on
  // the right side of y; trailing copies of g land exactly on y.
  RLEWord value_shift_witness(const internal::SubSystem& sub,
                              const ModExtremumReport& rep, MapIndex j,
                              const Int& k, ExtremumMode mode, bool valid) {
    const Int& y = sub.sys.y();
    const ExtInt target(y);
    MonotoneAnalyzer an(sub.sys, mode, valid);
    for (std::size_t c = 0; c < rep.clauses.size(); ++c) {
      const auto& val = rep.clause_values[c];
      if (!val) continue;
      const bool clears =
          mode == ExtremumMode::kSup ? *val >= target : *val <= target;
      if (!clears) continue;
      Int value;
      RLEWord s = an.reach(sub.sys.x(), rep.clauses[c], y, &value,
                           options_.max_witness_runs);
      const Int n = (y - value) / k;
      if (n < 0 || value + n * k != y) {
        throw std::logic_error("shift witness arithmetic failed");
      }
      RLEWord w = internal::lift(s, sub.to_parent);
      w.append(j, n);
      return w;
    }
    throw std::logic_error("no clause clears the target");
  }

  // Two maps with a = -1: their composition g is a shift; add it and solve
  // the augmented system, which takes the shift case.
  Verdict decide_two_involutions_z(const AffineSystem& sys, MapIndex j,
                                   MapIndex k, const std::string& desc) {
    std::vector<AffineMap> maps(sys.maps().begin(), sys.maps().end());
    const AffineMap g = then(sys.map(k), sys.map(j));
    maps.push_back(g);
    AffineSystem aug(std::move(maps), sys.x(), sys.y(), sys.domain());
    const MapIndex g_index = aug.size();
    if (aug.size() != sys.size() + 1 || !aug.map(g_index).is_shift()) {
      throw std::logic_error("composed involutions did not give a new shift");
    }
    Verdict v;
    std::ostringstream label;
    label << "Z.5 involutions " << j << "," << k << " -> shift " << g
          << " (solved for target y, not 0)";
    v.trace.push_back({label.str(), desc});
    Verdict child = decide_z_rec(aug);
    adopt_trace(v, child);
    v.reachable = child.reachable;
    build_witness(v, [&] {
      RLEWord w;
      for (const Run& r : child_witness(child).runs) {
        if (r.index != g_index) {
          w.append(r.index, r.count);
          continue;
        }
        if (r.count * 2 + w.runs.size() > options_.max_witness_runs) {
          throw WitnessUnavailable("expanded involution pair too long");
        }
        for (Int c = 0; c < r.count; ++c) {
          w.append(k, 1);
          w.append(j, 1);
        }
      }
      return w;
    });
    return v;
  }

  // ---- over N ------------------------------------------------------------

  Verdict decide_n_rec(const AffineSystem& sys) {
    const std::string key = internal::memo_key(sys);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Verdict v = decide_n_uncached(sys);
    memo_.emplace(key, v);
    return v;
  }

  Verdict decide_n_uncached(const AffineSystem& sys) {
    if (sys.x() == sys.y() || sys.empty()) return trivial(sys);
    const std::string desc = internal::describe(sys);

    if (auto j = internal::first_map(
            sys, [](const AffineMap& f) { return f.a == 0; })) {
      Verdict v;
      const Int& bj = sys.map(*j).b;
      auto sub = internal::without_map(sys, *j);
      v.trace.push_back({"N.1 constant map " + std::to_string(*j) +
                             (bj < 0 ? " (negative, dropped)" : ""),
                         desc});
      Verdict direct = decide_n_rec(sub.sys);
      adopt_trace(v, direct);
      if (direct.reachable || bj < 0) {
        v.reachable = direct.reachable;
        build_witness(v, [&] {
          return internal::lift(child_witness(direct), sub.to_parent);
        });
        return v;
      }
      Verdict via = decide_n_rec(sub.sys.with_endpoints(bj, sys.y()));
      adopt_trace(v, via);
      v.reachable = via.reachable;
      build_witness(v, [&] {
        RLEWord w;
        w.append(*j, 1);
        w.append(internal::lift(child_witness(via), sub.to_parent));
        return w;
      });
      return v;
    }

    if (auto j = internal::first_map(
            sys, [](const AffineMap& f) { return f.a < 0; })) {
      return decide_negative_n(sys, *j, desc);
    }

    if (auto j = internal::first_map(
            sys, [](const AffineMap& f) { return f.is_identity(); })) {
      Verdict v;
      v.trace.push_back({"N.3 identity map " + std::to_string(*j), desc});
      auto sub = internal::without_map(sys, *j);
      Verdict child = decide_n_rec(sub.sys);
      adopt_trace(v, child);
      v.reachable = child.reachable;
      build_witness(v, [&] {
        return internal::lift(child_witness(child), sub.to_parent);
      });
      return v;
    }

    if (auto j = internal::first_map(sys, [](const AffineMap& f) {
          return f.a == 1 && f.b < 0;
        })) {
      return decide_down_shift_n(sys, *j, desc);
    }

    Verdict v = decide_expanding_n(sys, options_);
    v.trace.insert(v.trace.begin(), {"N.5 expanding or upward shifts", desc});
    return v;
  }

  // f_j has a < 0, so it only applies on [0, floor(b/|a|)]. Build the graph
  // on those points, their images, x and y; the remaining maps contribute an
  // edge u -> v whenever they reach v from u on their own.
  Verdict decide_negative_n(const AffineSystem& sys, MapIndex j,
                            const std::string& desc) {
    const AffineMap f = sys.map(j);
    auto sub = internal::without_map(sys, j);
    Verdict v;
    if (f.b < 0) {
      v.trace.push_back({"N.2 negative map " + std::to_string(j) +
                             " never applicable, dropped",
                         desc});
      Verdict child = decide_n_rec(sub.sys);
      adopt_trace(v, child);
      v.reachable = child.reachable;
      build_witness(v, [&] {
        return internal::lift(child_witness(child), sub.to_parent);
      });
      return v;
    }
    const Int top = f.b / -f.a;
    if (top >= options_.max_search_vertices) {
      throw ResourceExceeded("applicability interval of a negative map has " +
                             (top + 1).str() + " points");
    }
    std::set<Int> vertices{sys.x(), sys.y()};
    for (Int u = 0; u <= top; ++u) {
      vertices.insert(u);
      vertices.insert(f(u));
    }
    v.trace.push_back({"N.2 negative map " + std::to_string(j) +
                           ", graph on " + std::to_string(vertices.size()) +
                           " vertices",
                       desc});

    struct Edge {
      Int from;
      std::optional<RLEWord> word;  // absent if the sub-witness is missing
    };
    std::map<Int, Edge> parent;
    std::deque<Int> queue{sys.x()};
    std::set<Int> seen{sys.x()};
    bool found = false;
    while (!queue.empty() && !found) {
      const Int u = queue.front();
      queue.pop_front();
      auto visit = [&](const Int& w, std::optional<RLEWord> word) {
        seen.insert(w);
        parent.emplace(w, Edge{u, std::move(word)});
        queue.push_back(w);
        if (w == sys.y()) found = true;
      };
      if (u <= top) {
        const Int image = f(u);
        if (!seen.count(image)) {
          RLEWord w;
          w.append(j, 1);
          visit(image, std::move(w));
          if (found) break;
        }
      }
      for (const Int& w : vertices) {
        if (seen.count(w)) continue;
        Verdict child = decide_n_rec(sub.sys.with_endpoints(u, w));
        if (!child.reachable) continue;
        std::optional<RLEWord> lifted;
        if (child.witness) lifted = internal::lift(*child.witness, sub.to_parent);
        visit(w, std::move(lifted));
        if (found) break;
      }
    }
    v.reachable = found;
    build_witness(v, [&] {
      std::vector<const Edge*> path;
      for (Int at = sys.y(); at != sys.x();) {
        const Edge& e = parent.at(at);
        path.push_back(&e);
        at = e.from;
      }
      RLEWord w;
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (!(*it)->word) throw WitnessUnavailable("sub-instance witness");
        w.append(*(*it)->word);
      }
      return w;
    });
    return v;
  }

  // g(z) = z + k with k < 0 and every other map has a > 0: y is reachable
  // iff some valid composition reaches a value >= y congruent to y mod k.
  Verdict decide_down_shift_n(const AffineSystem& sys, MapIndex j,
                              const std::string& desc) {
    const Int k = sys.map(j).b;
    auto sub = internal::without_map(sys, j);
    ModExtremumReport rep =
        analyze_mod_extremum(sub.sys, k, ExtremumMode::kSup, true, options_);
    note_report(rep);
    Verdict v;
    const std::string head =
        "N.4 downward shift " + std::to_string(j) + " k=" + k.str();
    if (!rep.result.has_value()) {
      v.trace.push_back({head + ": Empty", desc});
      return v;
    }
    v.reachable = rep.result.value() >= ExtInt(sys.y());
    v.trace.push_back({head + ": " + rep.result.str(), desc});
    build_witness(v, [&] {
      return value_shift_witness(sub, rep, j, k, ExtremumMode::kSup, true);
    });
    return v;
  }

  SolverOptions options_;
  SolverStats stats_;
  std::map<std::string, Verdict> memo_;
};

inline Verdict decide_z(const AffineSystem& sys,
                        const SolverOptions& options = {}) {
  if (sys.domain() != Domain::kIntegers) {
    throw PreconditionViolation("decide_z needs domain Z");
  }
  return Solver(options).decide(sys);
}

inline Verdict decide_n(const AffineSystem& sys,
                        const SolverOptions& options = {}) {
  if (sys.domain() != Domain::kNaturals) {
    throw PreconditionViolation("decide_n needs domain N");
  }
  return Solver(options).decide(sys);
}

inline Verdict decide(const AffineSystem& sys,
                      const SolverOptions& options = {}) {
  return Solver(options).decide(sys);
}

}  // namespace affreach

#endif  // AFFREACH_SOLVER_HPP_
