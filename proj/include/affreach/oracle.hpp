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

// Ground truth for testing: bounded breadth-first search, the integer
// knapsack reduction and its dynamic program, and seeded instance
// generators covering every dispatch case of the solver.

#ifndef AFFREACH_ORACLE_HPP_
#define AFFREACH_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "affreach/affine.hpp"
#include "affreach/errors.hpp"

namespace affreach {

struct OracleAnswer {
  std::optional<Word> path;  // absent: not found within the bounds

  bool found() const { return path.has_value(); }
};

namespace internal {

inline constexpr std::int64_t kDenseOracleBound = 10'000'000;

// bfs_oracle on a dense array when every quantity fits machine words.
inline OracleAnswer dense_bfs_oracle(const AffineSystem& sys,
                                     std::int64_t bound,
                                     std::size_t depth_bound) {
  __extension__ using Wide = __int128;
  std::vector<std::pair<Wide, Wide>> maps;
  for (const AffineMap& f : sys.maps()) {
    maps.emplace_back(static_cast<std::int64_t>(f.a),
                      static_cast<std::int64_t>(f.b));
  }
  const std::int64_t lo = sys.domain() == Domain::kNaturals ? 0 : -bound;
  const std::int64_t x = static_cast<std::int64_t>(sys.x());
  const std::int64_t y = static_cast<std::int64_t>(sys.y());
  const std::size_t span = static_cast<std::size_t>(bound - lo) + 1;
  std::vector<std::int32_t> prev(span);
  std::vector<std::uint8_t> via(span, 0);  // 0 = unvisited
  auto slot = [&](std::int64_t v) { return static_cast<std::size_t>(v - lo); };
  via[slot(x)] = 255;
  std::vector<std::int64_t> frontier{x};
  for (std::size_t depth = 0; depth < depth_bound && !frontier.empty();
       ++depth) {
    std::vector<std::int64_t> next;
    for (std::int64_t z : frontier) {
      for (std::size_t i = 0; i < maps.size(); ++i) {
        const Wide v = maps[i].first * z + maps[i].second;
        if (v < lo || v > bound) continue;
        const std::int64_t vv = static_cast<std::int64_t>(v);
        if (via[slot(vv)]) continue;
        via[slot(vv)] = static_cast<std::uint8_t>(i + 1);
        prev[slot(vv)] = static_cast<std::int32_t>(z);
        if (vv == y) {
          Word w;
          for (std::int64_t at = vv; at != x; at = prev[slot(at)]) {
            w.push_back(via[slot(at)]);
          }
          std::reverse(w.begin(), w.end());
          return {std::move(w)};
        }
        next.push_back(vv);
      }
    }
    frontier = std::move(next);
  }
  return {};
}

}  // namespace internal

// Shortest word from x to y among orbits that stay within |value| <=
// value_bound (and >= 0 over N) for at most depth_bound steps.
inline OracleAnswer bfs_oracle(const AffineSystem& sys, const Int& value_bound,
                               std::size_t depth_bound) {
  if (sys.x() == sys.y()) return {Word{}};
  const Int word_limit = Int(1) << 40;
  bool dense = value_bound <= internal::kDenseOracleBound &&
               sys.size() < 255 && abs(sys.x()) <= value_bound &&
               abs(sys.y()) <= value_bound;
  for (const AffineMap& f : sys.maps()) {
    dense = dense && abs(f.a) <= word_limit && abs(f.b) <= word_limit;
  }
  if (dense) {
    return internal::dense_bfs_oracle(
        sys, static_cast<std::int64_t>(value_bound), depth_bound);
  }
  std::map<Int, std::pair<Int, MapIndex>> parent;
  parent.emplace(sys.x(), std::make_pair(sys.x(), MapIndex{0}));
  std::vector<Int> frontier{sys.x()};
  const bool naturals = sys.domain() == Domain::kNaturals;
  for (std::size_t depth = 0; depth < depth_bound && !frontier.empty();
       ++depth) {
    std::vector<Int> next;
    for (const Int& z : frontier) {
      for (MapIndex i = 1; i <= sys.size(); ++i) {
        Int v = sys.map(i)(z);
        if (abs(v) > value_bound || (naturals && v < 0)) continue;
        if (!parent.emplace(v, std::make_pair(z, i)).second) continue;
        if (v == sys.y()) {
          Word w;
          for (Int at = v; at != sys.x();) {
            const auto& [prev, idx] = parent.at(at);
            w.push_back(idx);
            at = prev;
          }
          std::reverse(w.begin(), w.end());
          return {std::move(w)};
        }
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return {};
}

// Every value reachable within the bounds (including x itself).
inline std::map<Int, std::size_t> bfs_reachable_values(
    const AffineSystem& sys, const Int& value_bound, std::size_t depth_bound) {
  std::map<Int, std::size_t> depth_of{{sys.x(), 0}};
  std::vector<Int> frontier{sys.x()};
  const bool naturals = sys.domain() == Domain::kNaturals;
  for (std::size_t depth = 1; depth <= depth_bound && !frontier.empty();
       ++depth) {
    std::vector<Int> next;
    for (const Int& z : frontier) {
      for (const AffineMap& f : sys.maps()) {
        Int v = f(z);
        if (abs(v) > value_bound || (naturals && v < 0)) continue;
        if (depth_of.emplace(v, depth).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return depth_of;
}

struct KnapsackInstance {
  std::vector<std::int64_t> weights;
  std::int64_t capacity = 0;
};

// Maps z -> z + w_i from 0 to C. The maps commute, so a word reaches C iff
// C is a nonnegative combination of the weights.
inline AffineSystem knapsack_to_system(const KnapsackInstance& inst,
                                       Domain domain = Domain::kIntegers) {
  std::vector<AffineMap> maps;
  for (std::int64_t w : inst.weights) maps.push_back({1, w});
  return AffineSystem(std::move(maps), 0, inst.capacity, domain);
}

inline bool knapsack_dp(const KnapsackInstance& inst,
                        std::int64_t max_capacity = 10'000'000) {
  if (inst.weights.empty()) throw PreconditionViolation("no weights");
  for (std::int64_t w : inst.weights) {
    if (w < 1) throw PreconditionViolation("weights must be positive");
  }
  if (inst.capacity < 0) return false;
  if (inst.capacity > max_capacity) {
    throw ResourceExceeded("knapsack capacity above " +
                           std::to_string(max_capacity));
  }
  std::vector<bool> hit(static_cast<std::size_t>(inst.capacity) + 1, false);
  hit[0] = true;
  for (std::int64_t c = 1; c <= inst.capacity; ++c) {
    for (std::int64_t w : inst.weights) {
      if (w <= c && hit[static_cast<std::size_t>(c - w)]) {
        hit[static_cast<std::size_t>(c)] = true;
        break;
      }
    }
  }
  return hit[static_cast<std::size_t>(inst.capacity)];
}

enum class ProfileKind {
  kAllExpanding,
  kWithShift,
  kWithInvolution,
  kTwoInvolutions,
  kWithConstant,
  kNaturalsWithNegative,
  kMixed,
};

inline constexpr ProfileKind kAllProfileKinds[] = {
    ProfileKind::kAllExpanding,   ProfileKind::kWithShift,
    ProfileKind::kWithInvolution, ProfileKind::kTwoInvolutions,
    ProfileKind::kWithConstant,   ProfileKind::kNaturalsWithNegative,
    ProfileKind::kMixed,
};

inline const char* profile_name(ProfileKind k) {
  switch (k) {
    case ProfileKind::kAllExpanding: return "all-expanding";
    case ProfileKind::kWithShift: return "with-shift";
    case ProfileKind::kWithInvolution: return "with-involution";
    case ProfileKind::kTwoInvolutions: return "two-involutions";
    case ProfileKind::kWithConstant: return "with-constant";
    case ProfileKind::kNaturalsWithNegative: return "naturals-with-negative";
    case ProfileKind::kMixed: return "mixed";
  }
  return "?";
}

struct RandomProfile {
  ProfileKind kind = ProfileKind::kMixed;
  int max_maps = 3;
  int max_a = 3;
  int max_b = 4;
  int max_xy = 10;
  Domain domain = Domain::kIntegers;
};

// Deterministic in (seed, profile). kNaturalsWithNegative always yields
// domain N; the other kinds use profile.domain. The maps drawn after the
// profile's required ones are uniform in the coefficient box, except that
// kAllExpanding, kWithInvolution and kTwoInvolutions keep them expanding.
inline AffineSystem random_system(std::uint64_t seed,
                                  const RandomProfile& profile) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto expanding_a = [&] {
    if (profile.max_a < 2) throw PreconditionViolation("max_a < 2");
    int a = uniform(2, profile.max_a);
    return uniform(0, 1) ? a : -a;
  };
  auto any_b = [&] { return uniform(-profile.max_b, profile.max_b); };
  auto nonzero_b = [&] {
    int b = uniform(1, std::max(1, profile.max_b));
    return uniform(0, 1) ? b : -b;
  };

  const Domain domain = profile.kind == ProfileKind::kNaturalsWithNegative
                            ? Domain::kNaturals
                            : profile.domain;
  const int min_maps = profile.kind == ProfileKind::kTwoInvolutions ? 2 : 1;
  const int n = uniform(min_maps, std::max(min_maps, profile.max_maps));

  std::vector<AffineMap> maps;
  auto has = [&](const AffineMap& f) {
    return std::find(maps.begin(), maps.end(), f) != maps.end();
  };
  switch (profile.kind) {
    case ProfileKind::kWithShift:
      maps.push_back({1, nonzero_b()});
      break;
    case ProfileKind::kWithInvolution:
      maps.push_back({-1, any_b()});
      break;
    case ProfileKind::kTwoInvolutions: {
      const int b1 = any_b();
      int b2 = any_b();
      while (b2 == b1) b2 = any_b();
      maps.push_back({-1, b1});
      maps.push_back({-1, b2});
      break;
    }
    case ProfileKind::kWithConstant:
      maps.push_back({0, any_b()});
      break;
    case ProfileKind::kNaturalsWithNegative:
      maps.push_back({-uniform(1, std::max(1, profile.max_a)),
                      uniform(0, profile.max_b)});
      break;
    default:
      break;
  }
  const bool keep_expanding =
      profile.kind == ProfileKind::kAllExpanding ||
      profile.kind == ProfileKind::kWithInvolution ||
      profile.kind == ProfileKind::kTwoInvolutions;
  int guard = 0;
  while (static_cast<int>(maps.size()) < n && guard++ < 1000) {
    AffineMap f{keep_expanding ? expanding_a()
                               : uniform(-profile.max_a, profile.max_a),
                any_b()};
    if (!has(f)) maps.push_back(f);
  }
  std::shuffle(maps.begin(), maps.end(), rng);

  const int lo = domain == Domain::kNaturals ? 0 : -profile.max_xy;
  const int x = uniform(lo, profile.max_xy);
  const int y = uniform(lo, profile.max_xy);
  return AffineSystem(std::move(maps), x, y, domain);
}

}  // namespace affreach

#endif  // AFFREACH_ORACLE_HPP_
