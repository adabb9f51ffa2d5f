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

// Monotone analysis of reduced expressions over maps with positive linear
// coefficients: the increase predicates, per-clause suprema (or infima), and
// the modular extremum that drives the shift cases of the solver.
//
// Every map occurring in a reduced expression has a > 0, so every word's
// composite map is strictly increasing. A word that raises z raises every
// value above z, and pumping it reaches arbitrarily large values.

#ifndef AFFREACH_MONOTONE_HPP_
#define AFFREACH_MONOTONE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "affreach/affine.hpp"
#include "affreach/errors.hpp"
#include "affreach/mod_automaton.hpp"
#include "affreach/regex.hpp"
#include "affreach/verdict.hpp"

namespace affreach {

enum class ExtremumMode { kSup, kInf };

class ModExtremumResult {
 public:
  enum class Kind { kEmpty, kNegative, kValue };

  static ModExtremumResult empty() { return ModExtremumResult(Kind::kEmpty); }
  static ModExtremumResult negative() {
    return ModExtremumResult(Kind::kNegative);
  }
  static ModExtremumResult value(ExtInt v) {
    ModExtremumResult r(Kind::kValue);
    r.value_ = std::move(v);
    return r;
  }

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::kEmpty; }
  bool is_negative() const { return kind_ == Kind::kNegative; }
  bool has_value() const { return kind_ == Kind::kValue; }
  const ExtInt& value() const {
    if (!has_value()) throw std::logic_error("no extremum value");
    return value_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::kEmpty: return "Empty";
      case Kind::kNegative: return "Negative";
      default: return "Value(" + value_.str() + ")";
    }
  }

  friend bool operator==(const ModExtremumResult& l,
                         const ModExtremumResult& r) {
    return l.kind_ == r.kind_ && (!l.has_value() || l.value_ == r.value_);
  }

 private:
  explicit ModExtremumResult(Kind k) : kind_(k) {}

  Kind kind_;
  ExtInt value_;
};

inline std::ostream& operator<<(std::ostream& os, const ModExtremumResult& r) {
  return os << r.str();
}

// Evaluates I(z, E) ("some word of E raises z"), its mirror for INF mode
// ("some word lowers z"), or the validity-restricted I'(z, E) when valid is
// set. Results on star bodies are memoized per (body, z), so one analyzer
// should serve one decision.
class MonotoneAnalyzer {
 public:
  MonotoneAnalyzer(const AffineSystem& sys, ExtremumMode mode, bool valid)
      : sys_(sys), mode_(mode), valid_(valid) {
    if (valid_ && mode_ != ExtremumMode::kSup) {
      throw PreconditionViolation("validity analysis is defined for SUP only");
    }
  }

  ExtremumMode mode() const { return mode_; }
  bool valid() const { return valid_; }

  // Throws unless e is union-free, empty-set-free, and every literal has
  // a positive linear coefficient.
  void require_reduced(const RegexPtr& e) {
    if (checked_.count(e.get())) return;
    switch (e->kind()) {
      case RegexKind::kUnion:
        throw PreconditionViolation("expression contains a union");
      case RegexKind::kEmptySet:
        throw PreconditionViolation("expression contains the empty set");
      case RegexKind::kLiteral:
        if (sys_.map(e->literal()).a <= 0) {
          throw PreconditionViolation(
              "literal " + std::to_string(e->literal()) +
              " has a nonpositive linear coefficient");
        }
        break;
      default:
        for (const RegexPtr& c : e->children()) require_reduced(c);
    }
    checked_.insert(e.get());
  }

  bool predicate(const Int& z, const RegexPtr& e) {
    require_reduced(e);
    if (valid_ && z < 0) throw PreconditionViolation("I' needs z >= 0");
    const std::vector<RegexPtr> f = factors_of(e);
    return search(z, z, f);
  }

  // Extremum over the words of one clause, started at x. Absent when the
  // validity analysis discards the clause.
  std::optional<ExtInt> clause_extremum(const Int& x, const Clause& clause) {
    ExtInt cur = x;
    if (valid_ && x < 0) return std::nullopt;
    for (const RegexPtr& f : clause) {
      require_reduced(f);
      if (f->is(RegexKind::kLiteral)) {
        if (!cur.is_finite()) continue;  // a > 0 keeps +-inf in place
        Int next = sys_.map(f->literal())(cur.value());
        if (valid_ && next < 0) return std::nullopt;
        cur = std::move(next);
      } else if (f->is(RegexKind::kStar)) {
        if (cur.is_finite() && fires(cur.value(), f->body())) {
          cur = mode_ == ExtremumMode::kSup ? ExtInt::pos_inf()
                                            : ExtInt::neg_inf();
        }
      } else if (!f->is(RegexKind::kEpsilon)) {
        throw PreconditionViolation("clause factor is not a literal or star");
      }
    }
    return cur;
  }

  // A word of L(factors) whose value from start meets the threshold (>= for
  // SUP, <= for INF), valid with respect to start when required. Stars are
  // skipped unless they fire and the literal remainder falls short; the
  // first such star is pumped just enough. The caller guarantees that such
  // a word exists.
  RLEWord reach(const Int& start, std::span<const RegexPtr> factors,
                const Int& threshold, Int* value_out,
                std::size_t max_runs = 1'000'000) {
    RLEWord word;
    Int cur = start;
    bool pumped = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const RegexPtr& f = factors[i];
      if (f->is(RegexKind::kLiteral)) {
        cur = sys_.map(f->literal())(cur);
        if (valid_ && cur < 0) {
          throw std::logic_error("reconstructed word left the naturals");
        }
        word.append(f->literal(), 1);
        continue;
      }
      if (!f->is(RegexKind::kStar) || pumped) continue;
      const auto tail = factors.subspan(i + 1);
      if (skeleton_meets(cur, tail, threshold)) continue;
      if (!fires(cur, f->body())) continue;

      const Int better = mode_ == ExtremumMode::kSup ? cur + 1 : cur - 1;
      Int ignored;
      const std::vector<RegexPtr> body = factors_of(f->body());
      const RLEWord step = reach(cur, body, better, &ignored, max_runs);
      const AffineMap step_map = rle_map(sys_, step);
      auto ok = [&](const Int& n) {
        return skeleton_meets(power(step_map, n)(cur), tail, threshold);
      };
      Int hi = 1;
      while (!ok(hi)) {
        hi *= 2;
        if (hi > (Int(1) << 62)) {
          throw WitnessUnavailable("pump count beyond 2^62");
        }
      }
      Int lo = hi / 2;  // ok(lo) is false or lo == 0
      while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (ok(mid)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      if (step.runs.size() == 1) {
        word.append(step.runs.front().index, step.runs.front().count * hi);
      } else {
        if (Int(step.runs.size()) * hi + word.runs.size() > max_runs) {
          throw WitnessUnavailable("pumped word longer than " +
                                   std::to_string(max_runs) + " runs");
        }
        for (Int c = 0; c < hi; ++c) word.append(step);
      }
      cur = power(step_map, hi)(cur);
      pumped = true;
    }
    if (!meets(cur, threshold)) {
      throw std::logic_error("reconstructed word misses its threshold");
    }
    if (word.runs.size() > max_runs) {
      throw WitnessUnavailable("word longer than " + std::to_string(max_runs) +
                               " runs");
    }
    if (value_out) *value_out = cur;
    return word;
  }

  static std::vector<RegexPtr> factors_of(const RegexPtr& e) {
    if (e->is(RegexKind::kConcat)) return e->children();
    if (e->is(RegexKind::kEpsilon)) return {};
    return {e};
  }

 private:
  bool improves(const Int& v, const Int& ref) const {
    return mode_ == ExtremumMode::kSup ? v > ref : v < ref;
  }
  bool meets(const Int& v, const Int& threshold) const {
    return mode_ == ExtremumMode::kSup ? v >= threshold : v <= threshold;
  }

  // Does the word made of the literals of factors (stars taken zero times)
  // carry v to the threshold, validly if required?
  bool skeleton_meets(Int v, std::span<const RegexPtr> factors,
                      const Int& threshold) const {
    if (valid_ && v < 0) return false;
    for (const RegexPtr& f : factors) {
      if (!f->is(RegexKind::kLiteral)) continue;
      v = sys_.map(f->literal())(v);
      if (valid_ && v < 0) return false;
    }
    return meets(v, threshold);
  }

  // I(z, alpha), memoized.
  bool fires(const Int& z, const RegexPtr& body) {
    auto key = std::make_pair(body.get(), z);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::vector<RegexPtr> f = factors_of(body);
    const bool r = search(z, z, f);
    memo_.emplace(std::move(key), r);
    return r;
  }

  // Is there a word s of L(factors) with P_s(current) beating origin, where
  // current is origin after some literal prefix already applied? Leading
  // literals are applied; at the first star alpha* the answer is
  //   search(rest) || I(current, alpha),
  // which is I(z, l alpha* beta) <=> I(z, l beta) || I(P_l(z), alpha) and,
  // with the validity check on the prefix, its I' counterpart.
  bool search(const Int& origin, Int current,
              std::span<const RegexPtr> factors) {
    std::size_t i = 0;
    for (; i < factors.size(); ++i) {
      const RegexPtr& f = factors[i];
      if (f->is(RegexKind::kLiteral)) {
        current = sys_.map(f->literal())(current);
        if (valid_ && current < 0) return false;
      } else if (f->is(RegexKind::kStar)) {
        break;
      } else if (!f->is(RegexKind::kEpsilon)) {
        throw PreconditionViolation("factor is not a literal or star");
      }
    }
    if (i == factors.size()) return improves(current, origin);
    if (search(origin, current, factors.subspan(i + 1))) return true;
    return fires(current, factors[i]->body());
  }

  const AffineSystem& sys_;
  ExtremumMode mode_;
  bool valid_;
  std::map<std::pair<const Regex*, Int>, bool> memo_;
  std::unordered_set<const Regex*> checked_;
};

inline bool increase_predicate(const Int& z, const RegexPtr& e,
                               const AffineSystem& sys,
                               ExtremumMode mode = ExtremumMode::kSup) {
  MonotoneAnalyzer an(sys, mode, false);
  return an.predicate(z, e);
}

inline bool valid_increase_predicate(const Int& z, const RegexPtr& e,
                                     const AffineSystem& sys) {
  MonotoneAnalyzer an(sys, ExtremumMode::kSup, true);
  return an.predicate(z, e);
}

inline std::optional<ExtInt> clause_extremum(const Int& x, const Clause& c,
                                             const AffineSystem& sys,
                                             ExtremumMode mode, bool valid) {
  MonotoneAnalyzer an(sys, mode, valid);
  return an.clause_extremum(x, c);
}

// Everything the modular extremum computed, kept for witness extraction.
struct ModExtremumReport {
  ModExtremumResult result = ModExtremumResult::empty();
  ModAutomaton automaton;
  RegexPtr regex;  // after empty-set elimination; null when Empty early
  std::vector<Clause> clauses;
  std::vector<std::optional<ExtInt>> clause_values;
  std::size_t peak_regex_nodes = 0;
};

// Pipeline: congruence automaton, reachability check, state elimination,
// empty-set elimination, negative-literal scan (skipped when valid), DNF,
// then the extremum over all clauses.
inline ModExtremumReport analyze_mod_extremum(const AffineSystem& sys,
                                              const Int& k, ExtremumMode mode,
                                              bool valid,
                                              const SolverOptions& options = {}) {
  for (const AffineMap& f : sys.maps()) {
    if (f.a == 0) throw PreconditionViolation("constant map in mod_extremum");
    if (valid && f.a < 0) {
      throw PreconditionViolation("negative coefficient in valid analysis");
    }
  }
  if (valid && (sys.x() < 0 || sys.y() < 0)) {
    throw PreconditionViolation("valid analysis needs x, y >= 0");
  }
  ModExtremumReport rep;
  rep.automaton = build_mod_automaton(sys, k, options.max_automaton_states);
  if (!mod_reachable(rep.automaton)) return rep;

  RegexBuilder builder(options.max_regex_nodes);
  struct PeakGuard {
    ModExtremumReport& rep;
    RegexBuilder& builder;
    ~PeakGuard() { rep.peak_regex_nodes = builder.peak_nodes(); }
  } guard{rep, builder};

  RegexPtr raw = automaton_to_regex(rep.automaton, builder);
  rep.regex = eliminate_empty(raw, builder);
  if (rep.regex->is(RegexKind::kEmptySet)) return rep;
  if (!valid && has_negative_literal(rep.regex, sys)) {
    rep.result = ModExtremumResult::negative();
    return rep;
  }
  rep.clauses = to_dnf(rep.regex, builder);

  MonotoneAnalyzer an(sys, mode, valid);
  std::optional<ExtInt> best;
  for (const Clause& c : rep.clauses) {
    std::optional<ExtInt> v = an.clause_extremum(sys.x(), c);
    if (v && (!best || (mode == ExtremumMode::kSup ? *v > *best
                                                   : *v < *best))) {
      best = v;
    }
    rep.clause_values.push_back(std::move(v));
  }
  if (best) rep.result = ModExtremumResult::value(*best);
  return rep;
}

inline ModExtremumResult mod_extremum(const AffineSystem& sys, const Int& k,
                                      ExtremumMode mode,
                                      const SolverOptions& options = {}) {
  return analyze_mod_extremum(sys, k, mode, false, options).result;
}

inline ModExtremumResult mod_extremum_valid(const AffineSystem& sys,
                                            const Int& k,
                                            const SolverOptions& options = {}) {
  return analyze_mod_extremum(sys, k, ExtremumMode::kSup, true, options)
      .result;
}

}  // namespace affreach

#endif  // AFFREACH_MONOTONE_HPP_
