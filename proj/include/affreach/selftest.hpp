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

// Generator-backed acceptance checks shared by the `selftest` command and
// the acceptance test binary. Every check compares the decision procedures
// against an independent brute-force oracle defined here or in oracle.hpp.

#ifndef AFFREACH_SELFTEST_HPP_
#define AFFREACH_SELFTEST_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "affreach/affine.hpp"
#include "affreach/errors.hpp"
#include "affreach/mod_automaton.hpp"
#include "affreach/monotone.hpp"
#include "affreach/oracle.hpp"
#include "affreach/regex.hpp"
#include "affreach/solver.hpp"

namespace affreach::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::string detail;  // first failure, or a short summary
};

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " ("
     << r.name << "): " << r.checked << " checked, " << r.failures
     << " failed, " << static_cast<long>(r.seconds * 1000) << " ms";
  if (!r.detail.empty()) os << " -- " << r.detail;
  return os.str();
}

// Membership of a word in L(e). For every node the matcher computes which
// spans w[i, j) it matches, as a bit matrix, bottom-up over the DAG. Shares
// no code with the language enumerator or the automaton.
class Matcher {
 public:
  explicit Matcher(const Word& w) : w_(w) {
    if (w.size() >= 32) throw PreconditionViolation("word too long to match");
  }

  bool matches(const RegexPtr& e) {
    return (spans(e.get())[0] >> w_.size()) & 1u;
  }

 private:
  using Rel = std::vector<std::uint32_t>;  // row i: bit j set iff w[i, j)

  Rel identity() const {
    Rel r(w_.size() + 1);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = 1u << i;
    return r;
  }

  static Rel compose(const Rel& a, const Rel& b) {
    Rel c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        if ((a[i] >> k) & 1u) c[i] |= b[k];
      }
    }
    return c;
  }

  const Rel& spans(const Regex* e) {
    if (auto it = memo_.find(e); it != memo_.end()) return it->second;
    Rel r(w_.size() + 1, 0);
    switch (e->kind()) {
      case RegexKind::kEmptySet:
        break;
      case RegexKind::kEpsilon:
        r = identity();
        break;
      case RegexKind::kLiteral:
        for (std::size_t i = 0; i < w_.size(); ++i) {
          if (w_[i] == e->literal()) r[i] = 1u << (i + 1);
        }
        break;
      case RegexKind::kUnion:
        for (const RegexPtr& c : e->children()) {
          const Rel& s = spans(c.get());
          for (std::size_t i = 0; i < r.size(); ++i) r[i] |= s[i];
        }
        break;
      case RegexKind::kConcat:
        r = identity();
        for (const RegexPtr& c : e->children()) r = compose(r, spans(c.get()));
        break;
      case RegexKind::kStar: {
        const Rel body = spans(e->body().get());
        r = identity();
        for (;;) {
          Rel next = compose(r, body);
          bool grew = false;
          for (std::size_t i = 0; i < r.size(); ++i) {
            grew = grew || (next[i] & ~r[i]);
            r[i] |= next[i];
          }
          if (!grew) break;
        }
        break;
      }
    }
    return memo_.emplace(e, std::move(r)).first->second;
  }

  const Word& w_;
  std::unordered_map<const Regex*, Rel> memo_;
};

inline bool matches(const RegexPtr& e, const Word& w) {
  return Matcher(w).matches(e);
}

// All words over {1..alphabet} with at most max_len letters.
inline std::vector<Word> all_words(std::size_t alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t p = begin; p < end; ++p) {
      for (MapIndex c = 1; c <= alphabet; ++c) {
        Word w = out[p];
        w.push_back(c);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

// Does some word of the list increase (decrease for INF) z, validly when
// asked?
inline bool brute_force_fires(const AffineSystem& sys,
                              const std::vector<Word>& words, const Int& z,
                              ExtremumMode mode, bool valid) {
  for (const Word& w : words) {
    if (valid && !is_valid_orbit(sys, w, z)) continue;
    const Int v = word_map(sys, w)(z);
    if (mode == ExtremumMode::kSup ? v > z : v < z) return true;
  }
  return false;
}

// Random reduced expression (no union, no empty set) over {1..alphabet}
// with at most max_nodes nodes.
inline RegexPtr random_reduced(std::mt19937_64& rng, std::size_t alphabet,
                               std::size_t max_nodes, RegexBuilder& builder) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::function<RegexPtr(std::size_t)> gen = [&](std::size_t budget) {
    const int roll = budget <= 1 ? 0 : pick(0, 9);
    if (roll <= 3) {
      if (pick(0, 11) == 0) return builder.epsilon();
      return builder.literal(
          static_cast<MapIndex>(pick(1, static_cast<int>(alphabet))));
    }
    if (roll <= 6 || budget < 3) {
      return builder.star(gen(budget - 1));
    }
    const std::size_t left =
        static_cast<std::size_t>(pick(1, static_cast<int>(budget - 2)));
    return builder.concat(gen(left), gen(budget - 1 - left));
  };
  for (;;) {
    RegexPtr e = gen(max_nodes);
    if (e->size() <= max_nodes) return e;
  }
}

namespace detail {

template <typename Body>
CriterionResult timed(int id, std::string name, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  r.passed = r.failures == 0;
  return r;
}

inline void fail(CriterionResult& r, const std::string& what) {
  if (r.failures++ == 0) r.detail = what;
}

inline ProfileKind z_profile(std::size_t i) {
  static constexpr ProfileKind kinds[] = {
      ProfileKind::kAllExpanding,   ProfileKind::kWithShift,
      ProfileKind::kWithInvolution, ProfileKind::kTwoInvolutions,
      ProfileKind::kWithConstant,   ProfileKind::kMixed,
  };
  return kinds[i % std::size(kinds)];
}

inline ProfileKind n_profile(std::size_t i) {
  static constexpr ProfileKind kinds[] = {
      ProfileKind::kAllExpanding, ProfileKind::kWithShift,
      ProfileKind::kWithConstant, ProfileKind::kNaturalsWithNegative,
      ProfileKind::kMixed,
  };
  return kinds[i % std::size(kinds)];
}

}  // namespace detail

struct OracleAgreementReport {
  CriterionResult agreement;
  CriterionResult witnesses;
};

// Criteria 1 and 2: 500 random systems over Z; every pair the BFS oracle
// connects must be decided reachable, and every reachable verdict must
// carry a witness that replays.
inline OracleAgreementReport check_z_oracle_agreement(
    std::size_t systems = 500, double time_limit = 60.0) {
  OracleAgreementReport out;
  out.witnesses.id = 2;
  out.witnesses.name = "certificate soundness";
  std::size_t reachable = 0;
  out.agreement = detail::timed(1, "oracle agreement over Z", [&](auto& r) {
    for (std::size_t i = 0; i < systems; ++i) {
      RandomProfile profile;
      profile.kind = detail::z_profile(i);
      const AffineSystem sys = random_system(1000 + i, profile);
      ++r.checked;
      try {
        const Verdict v = decide_z(sys);
        const bool oracle = bfs_oracle(sys, 1'000'000, 40).found();
        if (oracle && !v.reachable) {
          detail::fail(r, "oracle path missed: " + internal::describe(sys));
        }
        if (v.reachable) {
          ++reachable;
          ++out.witnesses.checked;
          if (!v.witness || !check_witness(sys, *v.witness)) {
            detail::fail(out.witnesses,
                         "no valid witness: " + internal::describe(sys));
          }
        }
      } catch (const std::exception& e) {
        detail::fail(r, internal::describe(sys) + ": " + e.what());
      }
    }
  });
  if (out.agreement.seconds >= time_limit) {
    detail::fail(out.agreement, "took longer than the time limit");
  }
  out.witnesses.seconds = out.agreement.seconds;
  out.witnesses.passed = out.witnesses.failures == 0;
  if (out.agreement.failures == 0) {
    out.agreement.detail = std::to_string(reachable) + " reachable";
  }
  return out;
}

// Criterion 3: as criterion 1 over N with x, y in [0, 10]; every
// N-reachable instance must also be Z-reachable.
inline CriterionResult check_n_oracle_agreement(std::size_t systems = 500) {
  return detail::timed(3, "oracle agreement over N", [&](auto& r) {
    std::size_t reachable = 0;
    for (std::size_t i = 0; i < systems; ++i) {
      RandomProfile profile;
      profile.kind = detail::n_profile(i);
      profile.domain = Domain::kNaturals;
      const AffineSystem sys = random_system(5000 + i, profile);
      ++r.checked;
      try {
        const Verdict v = decide_n(sys);
        if (bfs_oracle(sys, 1'000'000, 40).found() && !v.reachable) {
          detail::fail(r, "oracle path missed: " + internal::describe(sys));
        }
        if (v.reachable) {
          ++reachable;
          if (!v.witness || !check_witness(sys, *v.witness)) {
            detail::fail(r, "no valid witness: " + internal::describe(sys));
          }
          if (!decide_z(sys.with_domain(Domain::kIntegers)).reachable) {
            detail::fail(r, "reachable over N only: " +
                                internal::describe(sys));
          }
        }
      } catch (const std::exception& e) {
        detail::fail(r, internal::describe(sys) + ": " + e.what());
      }
    }
    if (r.failures == 0) r.detail = std::to_string(reachable) + " reachable";
  });
}

// Criterion 4: knapsack instances with two weights in {1..9} and capacity
// 1..50, decided over Z and N against the DP.
inline CriterionResult check_knapsack(double time_limit = 120.0) {
  auto r = detail::timed(4, "knapsack exhaustive", [&](auto& r) {
    for (std::int64_t w1 = 1; w1 <= 9; ++w1) {
      for (std::int64_t w2 = 1; w2 <= 9; ++w2) {
        for (std::int64_t c = 1; c <= 50; ++c) {
          const KnapsackInstance inst{{w1, w2}, c};
          ++r.checked;
          const bool expected = knapsack_dp(inst);
          const AffineSystem z = knapsack_to_system(inst, Domain::kIntegers);
          const AffineSystem n = knapsack_to_system(inst, Domain::kNaturals);
          try {
            if (decide_z(z).reachable != expected ||
                decide_n(n).reachable != expected) {
              detail::fail(r, "mismatch: " + internal::describe(z));
            }
          } catch (const std::exception& e) {
            detail::fail(r, internal::describe(z) + ": " + e.what());
          }
        }
      }
    }
  });
  if (r.seconds >= time_limit) {
    detail::fail(r, "took longer than the time limit");
    r.passed = false;
  }
  return r;
}

// Criterion 5: word membership up to length 6 agrees across the automaton,
// its regular expression, the empty-set-free form and the clause union.
inline CriterionResult check_regex_pipeline(std::size_t automata = 200) {
  return detail::timed(5, "regex language preservation", [&](auto& r) {
    std::mt19937_64 rng(77);
    auto pick = [&](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (std::size_t i = 0; i < automata; ++i) {
      const int n = pick(1, 3);
      std::vector<AffineMap> maps;
      while (static_cast<int>(maps.size()) < n) {
        AffineMap f{pick(-3, 3), pick(-4, 4)};
        if (std::find(maps.begin(), maps.end(), f) == maps.end()) {
          maps.push_back(f);
        }
      }
      int k = pick(1, 4);
      if (pick(0, 1)) k = -k;
      const AffineSystem sys(maps, pick(-6, 6), pick(-6, 6));
      ++r.checked;
      try {
        const ModAutomaton aut = build_mod_automaton(sys, k, 100);
        RegexBuilder builder;
        const RegexPtr raw = automaton_to_regex(aut, builder);
        const RegexPtr clean = eliminate_empty(raw, builder);
        std::vector<RegexPtr> clauses;
        if (!clean->is(RegexKind::kEmptySet)) {
          for (const Clause& c : to_dnf(clean, builder)) {
            clauses.push_back(clause_regex(c, builder));
          }
        }
        for (const Word& w : all_words(sys.size(), 6)) {
          const bool a = aut.accepts(w);
          Matcher m(w);
          bool d = false;
          for (const RegexPtr& c : clauses) d = d || m.matches(c);
          if (m.matches(raw) != a || m.matches(clean) != a || d != a) {
            detail::fail(r, "language differs on automaton " +
                                std::to_string(i) + " mod " +
                                std::to_string(k) + ": " +
                                internal::describe(sys));
            break;
          }
        }
      } catch (const std::exception& e) {
        detail::fail(r, internal::describe(sys) + ": " + e.what());
      }
    }
  });
}

// Criterion 6: for random reduced expressions split at their first star as
// l alpha* beta, I(z, l alpha* beta) <=> I(z, l beta) || I(P_l(z), alpha)
// and I'(z, l alpha* beta) <=> V(z, l) && (I'(z, l beta) ||
// I'(P_l(z), alpha)). Star-free expressions are compared with exhaustive
// enumeration instead.
inline CriterionResult check_increase_identities(std::size_t expressions = 300) {
  return detail::timed(6, "increase predicate identities", [&](auto& r) {
    std::mt19937_64 rng(606);
    auto pick = [&](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    std::size_t starred = 0;
    for (std::size_t i = 0; i < expressions; ++i) {
      const int n = pick(1, 3);
      std::vector<AffineMap> maps;
      while (static_cast<int>(maps.size()) < n) {
        AffineMap f{pick(1, 3), pick(-3, 3)};
        if (std::find(maps.begin(), maps.end(), f) == maps.end()) {
          maps.push_back(f);
        }
      }
      const AffineSystem sys(maps, 0, 0);
      RegexBuilder builder;
      const RegexPtr e = random_reduced(rng, sys.size(), 8, builder);
      ++r.checked;

      std::vector<RegexPtr> factors = MonotoneAnalyzer::factors_of(e);
      std::size_t j = 0;
      while (j < factors.size() && !factors[j]->is(RegexKind::kStar)) ++j;
      const std::string where = to_string(e) + " over " +
                                internal::describe(sys);

      if (j == factors.size()) {
        const std::vector<Word> words = {[&] {
          Word w;
          for (const RegexPtr& f : factors) w.push_back(f->literal());
          return w;
        }()};
        for (int z = -5; z <= 5; ++z) {
          for (ExtremumMode mode : {ExtremumMode::kSup, ExtremumMode::kInf}) {
            if (increase_predicate(z, e, sys, mode) !=
                brute_force_fires(sys, words, z, mode, false)) {
              detail::fail(r, "enumeration differs at z=" +
                                  std::to_string(z) + " for " + where);
            }
          }
          if (z >= 0 && valid_increase_predicate(z, e, sys) !=
                            brute_force_fires(sys, words, z,
                                              ExtremumMode::kSup, true)) {
            detail::fail(r, "valid enumeration differs at z=" +
                                std::to_string(z) + " for " + where);
          }
        }
        continue;
      }

      ++starred;
      Word prefix;
      for (std::size_t p = 0; p < j; ++p) prefix.push_back(factors[p]->literal());
      const RegexPtr alpha = factors[j]->body();
      std::vector<RegexPtr> l_beta(factors.begin(), factors.begin() + j);
      l_beta.insert(l_beta.end(), factors.begin() + j + 1, factors.end());
      const RegexPtr lb = builder.concat(l_beta);
      const AffineMap pl = word_map(sys, prefix);

      for (int z = -5; z <= 5; ++z) {
        for (ExtremumMode mode : {ExtremumMode::kSup, ExtremumMode::kInf}) {
          const bool lhs = increase_predicate(z, e, sys, mode);
          const bool rhs = increase_predicate(z, lb, sys, mode) ||
                           increase_predicate(pl(z), alpha, sys, mode);
          if (lhs != rhs) {
            detail::fail(r, "I identity fails at z=" + std::to_string(z) +
                                " for " + where);
          }
        }
        if (z < 0) continue;
        const bool lhs = valid_increase_predicate(z, e, sys);
        const bool v = is_valid_orbit(sys, prefix, z);
        const bool rhs = v && (valid_increase_predicate(z, lb, sys) ||
                               valid_increase_predicate(pl(z), alpha, sys));
        if (lhs != rhs) {
          detail::fail(r, "I' identity fails at z=" + std::to_string(z) +
                              " for " + where);
        }
      }
    }
    if (r.failures == 0) {
      r.detail = std::to_string(starred) + " starred, " +
                 std::to_string(expressions - starred) + " star-free";
    }
  });
}

// Criterion 7: finite extrema are attained by bounded BFS and nothing
// beyond them is found; Empty means BFS finds no congruent value; an
// infinite extremum is certified by a reconstructed word that replays to
// a congruent value past 10^3 (resp. below -10^3).
inline CriterionResult check_mod_extremum(std::size_t instances = 100) {
  return detail::timed(7, "mod_extremum certification", [&](auto& r) {
    std::mt19937_64 rng(7007);
    auto pick = [&](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    std::size_t finite = 0;
    std::size_t infinite = 0;
    std::size_t empty = 0;
    for (std::size_t i = 0; i < instances; ++i) {
      const int n = pick(1, 2);
      std::vector<AffineMap> maps;
      while (static_cast<int>(maps.size()) < n) {
        AffineMap f{pick(1, 3), pick(-3, 3)};
        if (std::find(maps.begin(), maps.end(), f) == maps.end()) {
          maps.push_back(f);
        }
      }
      int k = pick(1, 4);
      if (pick(0, 1)) k = -k;
      const AffineSystem sys(maps, pick(-6, 6), pick(-6, 6));
      const std::string where =
          internal::describe(sys) + " k=" + std::to_string(k);
      const auto reached = bfs_reachable_values(sys, 10'000, 12);
      const Int m = std::abs(k);
      const std::size_t want = residue(sys.y(), m);
      ++r.checked;
      for (ExtremumMode mode : {ExtremumMode::kSup, ExtremumMode::kInf}) {
        const bool sup = mode == ExtremumMode::kSup;
        try {
          const ModExtremumReport rep =
              analyze_mod_extremum(sys, k, mode, false);
          const ModExtremumResult& res = rep.result;
          std::optional<Int> best;
          for (const auto& [value, depth] : reached) {
            if (residue(value, m) != want) continue;
            if (!best || (sup ? value > *best : value < *best)) best = value;
          }
          if (res.is_empty()) {
            ++empty;
            if (best) detail::fail(r, "Empty but BFS reaches y: " + where);
          } else if (res.is_negative()) {
            detail::fail(r, "Negative without negative maps: " + where);
          } else if (res.value().is_finite()) {
            ++finite;
            const Int& v = res.value().value();
            if (!reached.count(v)) {
              detail::fail(r, "value " + v.str() + " not attained: " + where);
            } else if (best && (sup ? *best > v : *best < v)) {
              detail::fail(r, "BFS beats " + v.str() + ": " + where);
            }
          } else {
            ++infinite;
            const Int threshold = sup ? Int(1000) : Int(-1000);
            MonotoneAnalyzer an(sys, mode, false);
            bool certified = false;
            for (std::size_t c = 0; c < rep.clauses.size() && !certified;
                 ++c) {
              if (!rep.clause_values[c] ||
                  rep.clause_values[c]->is_finite()) {
                continue;
              }
              Int value;
              const RLEWord w =
                  an.reach(sys.x(), rep.clauses[c], threshold, &value);
              const Int replay = apply_rle(sys, w, sys.x());
              certified = replay == value &&
                          (sup ? replay >= threshold : replay <= threshold) &&
                          residue(replay, m) == want;
            }
            if (!certified) {
              detail::fail(r, "infinite extremum not certified: " + where);
            }
          }
        } catch (const std::exception& e) {
          detail::fail(r, where + ": " + e.what());
        }
      }
    }
    if (r.failures == 0) {
      r.detail = std::to_string(finite) + " finite, " +
                 std::to_string(infinite) + " infinite, " +
                 std::to_string(empty) + " empty";
    }
  });
}

// Criterion 8: the fixed worked instances.
inline CriterionResult check_worked_instances() {
  return detail::timed(8, "worked-instance regression", [&](auto& r) {
    struct Case {
      AffineSystem sys;
      bool reachable;
      std::optional<RLEWord> witness;
    };
    auto runs = [](std::initializer_list<std::pair<MapIndex, int>> rs) {
      RLEWord w;
      for (const auto& [i, c] : rs) w.push_back(i, c);
      return w;
    };
    const std::vector<Case> cases = {
        {AffineSystem({{2, 1}, {1, -3}}, 0, 6), true, runs({{1, 4}, {2, 3}})},
        {AffineSystem({{2, 1}, {1, -3}}, 0, 2), false, std::nullopt},
        {AffineSystem({{-2, 0}, {1, -3}}, 1, 100), true,
         runs({{2, 17}, {1, 1}})},
        {AffineSystem({{1, -2}}, 5, 1, Domain::kNaturals), true,
         runs({{1, 2}})},
        {AffineSystem({{1, -2}}, 4, 1, Domain::kNaturals), false,
         std::nullopt},
    };
    for (const Case& c : cases) {
      ++r.checked;
      try {
        const Verdict v = decide(c.sys);
        if (v.reachable != c.reachable ||
            (c.witness && (!v.witness || !(*v.witness == *c.witness)))) {
          detail::fail(r, "unexpected verdict: " + internal::describe(c.sys));
        }
      } catch (const std::exception& e) {
        detail::fail(r, internal::describe(c.sys) + ": " + e.what());
      }
    }
    struct ModCase {
      AffineSystem sys;
      int k;
      std::string expected;
    };
    const std::vector<ModCase> mod_cases = {
        {AffineSystem({{2, 1}}, 0, 2), 3, "Empty"},
        {AffineSystem({{2, 1}}, 0, 6), 3, "Value(+inf)"},
        {AffineSystem({{-2, 0}}, 1, 3), 5, "Negative"},
    };
    for (const ModCase& c : mod_cases) {
      ++r.checked;
      const std::string got =
          mod_extremum(c.sys, c.k, ExtremumMode::kSup).str();
      if (got != c.expected) {
        detail::fail(r, "mod_extremum gave " + got + " for " +
                            internal::describe(c.sys));
      }
    }
  });
}

// Criterion 9: instances with |k| = 12 under several node budgets either
// decide in agreement with the BFS oracle or report ResourceExceeded with
// the largest expression built within twice the budget, quickly.
inline CriterionResult check_resource_honesty(double time_limit = 30.0) {
  auto r = detail::timed(9, "resource honesty", [&](auto& r) {
    const std::vector<AffineSystem> family = {
        AffineSystem({{1, -12}, {5, 1}, {7, 3}, {11, 2}}, 0, 7),
        AffineSystem({{1, 12}, {5, 1}, {7, 3}, {11, 2}}, 0, 7),
        AffineSystem({{1, -12}, {2, 1}, {3, 1}, {5, 2}}, 1, 4),
        AffineSystem({{1, -12}, {5, 0}}, 1, 5),
        AffineSystem({{1, 12}, {5, 0}}, 1, 4),
    };
    std::size_t exceeded = 0;
    for (std::size_t budget : {std::size_t{200}, std::size_t{20'000},
                               std::size_t{1'000'000}}) {
      for (const AffineSystem& sys : family) {
        ++r.checked;
        SolverOptions options;
        options.max_regex_nodes = budget;
        try {
          const Verdict v = decide_z(sys, options);
          const bool oracle = bfs_oracle(sys, 1'000'000, 30).found();
          if ((oracle && !v.reachable) ||
              (v.reachable && (!v.witness || !check_witness(sys, *v.witness)))) {
            detail::fail(r, "wrong verdict: " + internal::describe(sys));
          }
          if (v.stats.peak_regex_nodes > 2 * budget) {
            detail::fail(r, "budget overrun: " + internal::describe(sys));
          }
        } catch (const ResourceExceeded& e) {
          ++exceeded;
          if (e.peak() > 2 * budget) {
            detail::fail(r, "budget overrun before refusal: " +
                                internal::describe(sys));
          }
        } catch (const std::exception& e) {
          detail::fail(r, internal::describe(sys) + ": " + e.what());
        }
      }
    }
    if (r.failures == 0) {
      r.detail = std::to_string(exceeded) + " resource-exceeded, " +
                 std::to_string(r.checked - exceeded) + " decided";
    }
  });
  if (r.seconds >= time_limit) {
    detail::fail(r, "took longer than the time limit");
    r.passed = false;
  }
  return r;
}

inline std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  OracleAgreementReport z = check_z_oracle_agreement();
  out.push_back(z.agreement);
  out.push_back(z.witnesses);
  out.push_back(check_n_oracle_agreement());
  out.push_back(check_knapsack());
  out.push_back(check_regex_pipeline());
  out.push_back(check_increase_identities());
  out.push_back(check_mod_extremum());
  out.push_back(check_worked_instances());
  out.push_back(check_resource_honesty());
  return out;
}

}  // namespace affreach::selftest

#endif  // AFFREACH_SELFTEST_HPP_
