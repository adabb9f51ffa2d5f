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

// Reachability by exhaustive search over a bounded interval, for systems
// whose maps push every value outside the interval further away. Over Z the
// system may carry one map z -> -z + b; over N it may carry any number of
// positive shifts.

#ifndef AFFREACH_INTERVAL_SOLVER_HPP_
#define AFFREACH_INTERVAL_SOLVER_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "affreach/affine.hpp"
#include "affreach/errors.hpp"
#include "affreach/verdict.hpp"

namespace affreach {

// The part of the interval graph reachable from a root. Every edge
// z -> f_i(z) has both endpoints inside [lo, hi].
struct IntervalGraph {
  Int lo;
  Int hi;
  std::map<Int, std::vector<std::pair<Int, MapIndex>>> adjacency;

  bool contains(const Int& z) const { return lo <= z && z <= hi; }
};

namespace internal {

struct IntervalSearch {
  IntervalGraph graph;
  std::map<Int, std::pair<Int, MapIndex>> parent;
  bool found = false;
};

// Breadth-first exploration from root; stops early once target is seen.
inline IntervalSearch explore_interval(const AffineSystem& sys, const Int& lo,
                                       const Int& hi, const Int& root,
                                       const std::optional<Int>& target,
                                       std::size_t max_vertices) {
  IntervalSearch s;
  s.graph.lo = lo;
  s.graph.hi = hi;
  if (!s.graph.contains(root)) return s;
  std::deque<Int> queue{root};
  s.graph.adjacency[root];
  if (target && *target == root) {
    s.found = true;
    return s;
  }
  while (!queue.empty()) {
    Int z = std::move(queue.front());
    queue.pop_front();
    auto& edges = s.graph.adjacency[z];
    for (MapIndex i = 1; i <= sys.size(); ++i) {
      Int next = sys.map(i)(z);
      if (!s.graph.contains(next)) continue;
      edges.emplace_back(next, i);
      if (s.graph.adjacency.count(next)) continue;
      if (s.graph.adjacency.size() >= max_vertices) {
        throw ResourceExceeded("interval search visited more than " +
                               std::to_string(max_vertices) + " vertices");
      }
      s.graph.adjacency[next];
      s.parent.emplace(next, std::make_pair(z, i));
      if (target && *target == next) {
        s.found = true;
        return s;
      }
      queue.push_back(std::move(next));
    }
  }
  return s;
}

inline Word path_to(const IntervalSearch& s, const Int& root, Int target) {
  Word w;
  while (target != root) {
    const auto& [prev, i] = s.parent.at(target);
    w.push_back(i);
    target = prev;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

inline Int max_abs_b(const AffineSystem& sys) {
  Int m = 0;
  for (const AffineMap& f : sys.maps()) m = std::max<Int>(m, abs(f.b));
  return m;
}

inline Verdict search_interval(const AffineSystem& sys, const Int& lo,
                               const Int& hi, const SolverOptions& options,
                               const std::string& label) {
  Verdict v;
  std::ostringstream summary;
  summary << "interval [" << lo << "," << hi << "], x=" << sys.x()
          << ", y=" << sys.y();
  v.trace.push_back({label, summary.str()});
  if (sys.x() == sys.y()) {
    v.reachable = true;
    v.witness = RLEWord{};
    return v;
  }
  IntervalSearch s = explore_interval(sys, lo, hi, sys.x(), sys.y(),
                                      options.max_search_vertices);
  v.reachable = s.found;
  if (s.found) v.witness = RLEWord::from_word(path_to(s, sys.x(), sys.y()));
  return v;
}

}  // namespace internal

// Reachable part of the interval graph from sys.x().
inline IntervalGraph build_interval_graph(const AffineSystem& sys,
                                          const Int& lo, const Int& hi,
                                          std::size_t max_vertices = 1'000'000) {
  return internal::explore_interval(sys, lo, hi, sys.x(), std::nullopt,
                                    max_vertices)
      .graph;
}

// Every map but the optional involution must satisfy |a| > 1; the involution
// must have a = -1.
inline Verdict decide_expanding_z(const AffineSystem& sys,
                                  std::optional<MapIndex> involution = {},
                                  const SolverOptions& options = {}) {
  if (sys.domain() != Domain::kIntegers) {
    throw PreconditionViolation("decide_expanding_z needs domain Z");
  }
  for (MapIndex i = 1; i <= sys.size(); ++i) {
    const AffineMap& f = sys.map(i);
    if (involution && *involution == i) {
      if (f.a != -1) {
        throw PreconditionViolation("designated involution has a != -1");
      }
    } else if (abs(f.a) <= 1) {
      throw PreconditionViolation("map " + std::to_string(i) +
                                  " does not expand absolute value");
    }
  }
  const Int m = internal::max_abs_b(sys);
  const Int r = std::max<Int>(1 + m, abs(sys.y()));
  // With z -> -z + b_j an orbit may shrink by up to m before the next
  // expanding step, so [-r, r] widened by b_j alone is not closed under
  // preimages. Past 3m, involution-then-expansion still grows |z|, and every
  // value on such an orbit stays above |z| - m; hence the radius below.
  const Int t = involution ? std::max<Int>(r + m, 3 * m) : r;
  const Int lo = -t;
  const Int hi = t;
  return internal::search_interval(sys, lo, hi, options,
                                   involution ? "Z.expanding+involution"
                                              : "Z.expanding");
}

// Every map must satisfy |a| > 1, or be a positive shift z -> z + b, b > 0.
inline Verdict decide_expanding_n(const AffineSystem& sys,
                                  const SolverOptions& options = {}) {
  if (sys.domain() != Domain::kNaturals) {
    throw PreconditionViolation("decide_expanding_n needs domain N");
  }
  for (MapIndex i = 1; i <= sys.size(); ++i) {
    const AffineMap& f = sys.map(i);
    if (abs(f.a) <= 1 && !(f.a == 1 && f.b > 0)) {
      throw PreconditionViolation("map " + std::to_string(i) +
                                  " neither expands nor shifts upward");
    }
  }
  const Int q = 1 + internal::max_abs_b(sys);
  const Int r = std::max<Int>(q, sys.y());
  return internal::search_interval(sys, 0, r, options, "N.expanding");
}

}  // namespace affreach

#endif  // AFFREACH_INTERVAL_SOLVER_HPP_
