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

// The congruence-class automaton of an affine system and its conversion to
// a regular expression by state elimination.

#ifndef AFFREACH_MOD_AUTOMATON_HPP_
#define AFFREACH_MOD_AUTOMATON_HPP_

#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "affreach/affine.hpp"
#include "affreach/errors.hpp"
#include "affreach/regex.hpp"

namespace affreach {

// Canonical residue of v modulo a positive m, in 0..m-1.
inline std::size_t residue(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

// DFA over letters 1..N whose states are residues modulo m. Reading letter
// i from state r moves to (a_i * r + b_i) mod m.
struct ModAutomaton {
  std::size_t modulus = 1;
  std::size_t alphabet = 0;
  std::vector<std::vector<std::size_t>> next;  // next[state][letter - 1]
  std::size_t start = 0;
  std::size_t accept = 0;

  std::size_t step(std::size_t state, MapIndex letter) const {
    return next.at(state).at(letter - 1);
  }

  bool accepts(const Word& w) const {
    std::size_t s = start;
    for (MapIndex i : w) s = step(s, i);
    return s == accept;
  }

  // States on some start -> accept path.
  std::vector<bool> useful_states() const {
    std::vector<bool> fwd(modulus, false);
    std::vector<bool> bwd(modulus, false);
    std::vector<std::vector<std::size_t>> rev(modulus);
    for (std::size_t s = 0; s < modulus; ++s) {
      for (std::size_t t : next[s]) rev[t].push_back(s);
    }
    auto flood = [](std::vector<bool>& seen, std::size_t root,
                    const auto& succ) {
      std::deque<std::size_t> q{root};
      seen[root] = true;
      while (!q.empty()) {
        std::size_t s = q.front();
        q.pop_front();
        for (std::size_t t : succ(s)) {
          if (!seen[t]) {
            seen[t] = true;
            q.push_back(t);
          }
        }
      }
    };
    flood(fwd, start, [&](std::size_t s) -> const auto& { return next[s]; });
    flood(bwd, accept, [&](std::size_t s) -> const auto& { return rev[s]; });
    std::vector<bool> out(modulus);
    for (std::size_t s = 0; s < modulus; ++s) out[s] = fwd[s] && bwd[s];
    return out;
  }
};

inline ModAutomaton build_mod_automaton(const AffineSystem& sys, const Int& k,
                                        std::size_t max_states = 100'000) {
  if (k == 0) throw PreconditionViolation("modulus k must be nonzero");
  const Int m = abs(k);
  if (m > max_states) {
    throw ResourceExceeded("congruence automaton with " + m.str() +
                           " states");
  }
  ModAutomaton aut;
  aut.modulus = static_cast<std::size_t>(m);
  aut.alphabet = sys.size();
  aut.next.assign(aut.modulus, std::vector<std::size_t>(sys.size()));
  for (std::size_t r = 0; r < aut.modulus; ++r) {
    for (MapIndex i = 1; i <= sys.size(); ++i) {
      aut.next[r][i - 1] = residue(sys.map(i)(Int(r)), m);
    }
  }
  aut.start = residue(sys.x(), m);
  aut.accept = residue(sys.y(), m);
  return aut;
}

inline bool mod_reachable(const ModAutomaton& aut) {
  return aut.useful_states()[aut.start];
}

// State elimination. Fresh initial and final states are joined to start and
// accept by e-edges; the original states are then eliminated in increasing
// index order. States off every start -> accept path are dropped first and
// missing edges are never materialized, so the result is the empty set
// exactly when the language is empty.
inline RegexPtr automaton_to_regex(const ModAutomaton& aut,
                                   RegexBuilder& builder) {
  const std::vector<bool> useful = aut.useful_states();
  if (!useful[aut.start]) return builder.empty_set();

  const std::size_t fresh_start = aut.modulus;
  const std::size_t fresh_accept = aut.modulus + 1;
  std::vector<std::map<std::size_t, RegexPtr>> out(aut.modulus + 2);
  std::vector<std::set<std::size_t>> in(aut.modulus + 2);
  auto add_edge = [&](std::size_t p, std::size_t q, const RegexPtr& r) {
    auto [it, inserted] = out[p].try_emplace(q, r);
    if (!inserted) it->second = builder.union_of(it->second, r);
    in[q].insert(p);
  };

  for (std::size_t p = 0; p < aut.modulus; ++p) {
    if (!useful[p]) continue;
    for (MapIndex i = 1; i <= aut.alphabet; ++i) {
      const std::size_t q = aut.next[p][i - 1];
      if (useful[q]) add_edge(p, q, builder.literal(i));
    }
  }
  add_edge(fresh_start, aut.start, builder.epsilon());
  add_edge(aut.accept, fresh_accept, builder.epsilon());

  for (std::size_t k = 0; k < aut.modulus; ++k) {
    if (!useful[k]) continue;
    RegexPtr loop;
    if (auto it = out[k].find(k); it != out[k].end()) {
      loop = builder.star(it->second);
    }
    std::vector<std::size_t> preds;
    for (std::size_t p : in[k]) {
      if (p != k) preds.push_back(p);
    }
    std::vector<std::pair<std::size_t, RegexPtr>> succs;
    for (const auto& [q, r] : out[k]) {
      if (q != k) succs.emplace_back(q, r);
    }
    for (std::size_t p : preds) {
      const RegexPtr into = out[p].at(k);
      for (const auto& [q, from] : succs) {
        RegexPtr piece = loop ? builder.concat({into, loop, from})
                              : builder.concat(into, from);
        add_edge(p, q, piece);
      }
      out[p].erase(k);
    }
    for (const auto& [q, r] : succs) in[q].erase(k);
    out[k].clear();
    in[k].clear();
  }

  auto it = out[fresh_start].find(fresh_accept);
  return it == out[fresh_start].end() ? builder.empty_set() : it->second;
}

}  // namespace affreach

#endif  // AFFREACH_MOD_AUTOMATON_HPP_
