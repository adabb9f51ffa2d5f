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

// Integer affine maps z -> a*z + b, words of map applications, and the
// closed-form arithmetic shared by every decision procedure.
//
// Words are applied left to right: word[0] acts on the argument first.
// Map indices are 1-based, matching the instance and witness file formats.

#ifndef AFFREACH_AFFINE_HPP_
#define AFFREACH_AFFINE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "affreach/errors.hpp"

namespace affreach {

// Arbitrary precision; expression templates off so Int behaves as a value.
using Int = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using MapIndex = std::size_t;
using Word = std::vector<MapIndex>;

enum class Domain { kIntegers, kNaturals };

inline const char* domain_name(Domain d) {
  return d == Domain::kIntegers ? "Z" : "N";
}

// Longest run of an expanding map (|a| >= 2) that is evaluated in closed
// form. Beyond this the value has more than a few million bits.
inline constexpr std::uint64_t kMaxExpandingRun = std::uint64_t{1} << 22;

struct AffineMap {
  Int a;
  Int b;

  Int operator()(const Int& z) const { return a * z + b; }

  bool is_identity() const { return a == 1 && b == 0; }
  bool is_shift() const { return a == 1 && b != 0; }

  friend bool operator==(const AffineMap& l, const AffineMap& r) {
    return l.a == r.a && l.b == r.b;
  }
  friend bool operator<(const AffineMap& l, const AffineMap& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
  friend std::ostream& operator<<(std::ostream& os, const AffineMap& f) {
    return os << "(" << f.a << "," << f.b << ")";
  }
};

inline Int apply(const AffineMap& f, const Int& z) { return f(z); }

inline AffineMap identity_map() { return {1, 0}; }

// The map "first, then second", i.e. second o first.
inline AffineMap then(const AffineMap& first, const AffineMap& second) {
  return {second.a * first.a, second.a * first.b + second.b};
}

// f applied n times, in closed form.
inline AffineMap power(const AffineMap& f, const Int& n) {
  if (n < 0) throw PreconditionViolation("negative repetition count");
  if (n == 0) return identity_map();
  if (f.a == 1) return {1, n * f.b};
  if (f.a == 0) return f;
  if (f.a == -1) return (n % 2 == 0) ? identity_map() : f;
  if (n > kMaxExpandingRun) {
    throw ResourceExceeded("run of an expanding map longer than " +
                           std::to_string(kMaxExpandingRun));
  }
  const Int an = boost::multiprecision::pow(f.a, static_cast<unsigned>(n));
  return {an, f.b * (an - 1) / (f.a - 1)};
}

// Integer extended with +inf and -inf, totally ordered.
class ExtInt {
 public:
  enum class Kind { kNegInf = -1, kFinite = 0, kPosInf = 1 };

  ExtInt() = default;
  ExtInt(Int v) : value_(std::move(v)) {}  // NOLINT(runtime/explicit)
  ExtInt(int v) : value_(v) {}             // NOLINT(runtime/explicit)

  static ExtInt pos_inf() { return ExtInt(Kind::kPosInf); }
  static ExtInt neg_inf() { return ExtInt(Kind::kNegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  const Int& value() const {
    if (!is_finite()) throw std::logic_error("ExtInt is infinite");
    return value_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::kNegInf: return "-inf";
      case Kind::kPosInf: return "+inf";
      default: return value_.str();
    }
  }

  friend std::strong_ordering operator<=>(const ExtInt& l, const ExtInt& r) {
    if (l.kind_ != r.kind_) {
      return static_cast<int>(l.kind_) <=> static_cast<int>(r.kind_);
    }
    if (!l.is_finite()) return std::strong_ordering::equal;
    if (l.value_ < r.value_) return std::strong_ordering::less;
    if (l.value_ > r.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const ExtInt& l, const ExtInt& r) {
    return (l <=> r) == std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtInt& v) {
    return os << v.str();
  }

 private:
  explicit ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  Int value_ = 0;
};

// A reachability instance: maps F, start x, target y, and the domain.
// Duplicate maps are dropped on construction, keeping the first occurrence.
class AffineSystem {
 public:
  AffineSystem(std::vector<AffineMap> maps, Int x, Int y,
               Domain domain = Domain::kIntegers)
      : x_(std::move(x)), y_(std::move(y)), domain_(domain) {
    if (domain_ == Domain::kNaturals && (x_ < 0 || y_ < 0)) {
      throw std::invalid_argument("endpoints must be nonnegative over N");
    }
    input_to_index_.reserve(maps.size());
    for (std::size_t p = 0; p < maps.size(); ++p) {
      auto it = std::find(maps_.begin(), maps_.end(), maps[p]);
      if (it == maps_.end()) {
        maps_.push_back(std::move(maps[p]));
        first_input_.push_back(p + 1);
        input_to_index_.push_back(maps_.size());
      } else {
        input_to_index_.push_back(
            static_cast<MapIndex>(it - maps_.begin()) + 1);
      }
    }
  }

  std::size_t size() const { return maps_.size(); }
  bool empty() const { return maps_.empty(); }
  std::span<const AffineMap> maps() const { return maps_; }
  const Int& x() const { return x_; }
  const Int& y() const { return y_; }
  Domain domain() const { return domain_; }

  bool contains(MapIndex i) const { return i >= 1 && i <= maps_.size(); }

  const AffineMap& map(MapIndex i) const {
    if (!contains(i)) {
      throw std::out_of_range("map index " + std::to_string(i) +
                              " outside 1.." + std::to_string(maps_.size()));
    }
    return maps_[i - 1];
  }

  // Position (1-based) in the constructor's list where map i first appeared.
  MapIndex input_position(MapIndex i) const {
    map(i);
    return first_input_[i - 1];
  }
  // Length of the constructor's list, duplicates included.
  std::size_t input_size() const { return input_to_index_.size(); }
  // Map index for a 1-based position in the constructor's list.
  MapIndex index_of_input(MapIndex p) const {
    if (p < 1 || p > input_to_index_.size()) {
      throw std::out_of_range("input position " + std::to_string(p));
    }
    return input_to_index_[p - 1];
  }

  AffineSystem with_endpoints(Int x, Int y) const {
    AffineSystem s = *this;
    if (domain_ == Domain::kNaturals && (x < 0 || y < 0)) {
      throw std::invalid_argument("endpoints must be nonnegative over N");
    }
    s.x_ = std::move(x);
    s.y_ = std::move(y);
    return s;
  }

  AffineSystem with_domain(Domain d) const {
    return AffineSystem(maps_, x_, y_, d);
  }

 private:
  std::vector<AffineMap> maps_;
  std::vector<MapIndex> first_input_;
  std::vector<MapIndex> input_to_index_;
  Int x_;
  Int y_;
  Domain domain_;
};

struct Run {
  MapIndex index = 0;
  Int count = 0;

  friend bool operator==(const Run& l, const Run& r) {
    return l.index == r.index && l.count == r.count;
  }
};

// Run-length encoded word. Counts may be far too large to expand.
struct RLEWord {
  std::vector<Run> runs;

  // Appends without merging into the previous run.
  void push_back(MapIndex index, Int count) {
    runs.push_back({index, std::move(count)});
  }

  // Appends, merging with the last run when the index repeats.
  void append(MapIndex index, const Int& count) {
    if (count == 0) return;
    if (!runs.empty() && runs.back().index == index) {
      runs.back().count += count;
    } else {
      runs.push_back({index, count});
    }
  }

  void append(const RLEWord& other) {
    for (const Run& r : other.runs) append(r.index, r.count);
  }

  // One run of count 1 per letter.
  static RLEWord from_word(const Word& w) {
    RLEWord out;
    for (MapIndex i : w) out.push_back(i, 1);
    return out;
  }

  Int length() const {
    Int n = 0;
    for (const Run& r : runs) n += r.count;
    return n;
  }

  // Materializes the word; only meaningful for short witnesses.
  Word expand() const {
    Word w;
    for (const Run& r : runs) {
      for (Int c = 0; c < r.count; ++c) w.push_back(r.index);
    }
    return w;
  }

  friend bool operator==(const RLEWord& l, const RLEWord& r) {
    return l.runs == r.runs;
  }
};

inline std::ostream& operator<<(std::ostream& os, const RLEWord& w) {
  os << "[";
  for (std::size_t i = 0; i < w.runs.size(); ++i) {
    if (i) os << ",";
    os << "(" << w.runs[i].index << "," << w.runs[i].count << ")";
  }
  return os << "]";
}

struct OrbitResult {
  Int value;
  std::vector<Int> orbit;
};

inline OrbitResult apply_word(const AffineSystem& sys, const Word& w,
                              const Int& z) {
  OrbitResult r{z, {z}};
  r.orbit.reserve(w.size() + 1);
  for (MapIndex i : w) {
    r.value = sys.map(i)(r.value);
    r.orbit.push_back(r.value);
  }
  return r;
}

// Composite map of a word, so apply_word(w, z).value == word_map(w)(z).
inline AffineMap word_map(const AffineSystem& sys, const Word& w) {
  AffineMap f = identity_map();
  for (MapIndex i : w) f = then(f, sys.map(i));
  return f;
}

inline AffineMap rle_map(const AffineSystem& sys, const RLEWord& w) {
  AffineMap f = identity_map();
  for (const Run& r : w.runs) f = then(f, power(sys.map(r.index), r.count));
  return f;
}

inline Int apply_rle(const AffineSystem& sys, const RLEWord& w, const Int& z) {
  Int v = z;
  for (const Run& r : w.runs) {
    if (r.count < 0) throw PreconditionViolation("negative run count");
    v = power(sys.map(r.index), r.count)(v);
  }
  return v;
}

inline bool is_valid_orbit(const AffineSystem& sys, const Word& w,
                           const Int& z) {
  if (z < 0) return false;
  Int v = z;
  for (MapIndex i : w) {
    v = sys.map(i)(v);
    if (v < 0) return false;
  }
  return true;
}

// Checks that a run of f with the given count, started at a nonnegative z,
// stays nonnegative. The even and odd subsequences of the orbit are each
// monotone (f o f has a nonnegative linear coefficient), so the first two
// and last two entries bound every entry.
inline bool run_stays_nonnegative(const AffineMap& f, const Int& count,
                                  const Int& z) {
  if (count == 0) return true;
  if (f(z) < 0) return false;
  if (power(f, count)(z) < 0) return false;
  if (count >= 2) {
    if (f(f(z)) < 0) return false;
    if (power(f, count - 1)(z) < 0) return false;
  }
  return true;
}

inline bool check_witness(const AffineSystem& sys, const RLEWord& w) {
  Int v = sys.x();
  const bool naturals = sys.domain() == Domain::kNaturals;
  if (naturals && v < 0) return false;
  for (const Run& r : w.runs) {
    if (!sys.contains(r.index) || r.count < 0) return false;
    const AffineMap& f = sys.map(r.index);
    if (naturals && !run_stays_nonnegative(f, r.count, v)) return false;
    v = power(f, r.count)(v);
  }
  return v == sys.y();
}

struct ShiftNormalForm {
  Word remainder;  // the word with every shift occurrence removed
  Int multiplier;  // word(z) == remainder(z) + multiplier * k
};

// Moves every occurrence of the shift z -> z + k out of the word. A shift
// applied before maps with coefficients c1..cr contributes c1*...*cr copies
// of k.
inline ShiftNormalForm shift_normalize(const AffineSystem& sys,
                                       MapIndex shift_index, const Word& w) {
  if (sys.map(shift_index).a != 1) {
    throw PreconditionViolation("map " + std::to_string(shift_index) +
                                " is not a shift");
  }
  ShiftNormalForm out{{}, 0};
  Int tail_product = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == shift_index) {
      out.multiplier += tail_product;
      continue;
    }
    const AffineMap& f = sys.map(*it);
    if (f.a == 0) {
      throw PreconditionViolation("constant map " + std::to_string(*it) +
                                  " inside shift normalization");
    }
    tail_product *= f.a;
  }
  for (MapIndex i : w) {
    if (i != shift_index) out.remainder.push_back(i);
  }
  return out;
}

}  // namespace affreach

#endif  // AFFREACH_AFFINE_HPP_
