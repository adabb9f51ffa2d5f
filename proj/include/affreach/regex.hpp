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

// Regular expressions over map indices: the AST, a size-capped builder, and
// the rewrites that bring an expression into union-free clauses.

#ifndef AFFREACH_REGEX_HPP_
#define AFFREACH_REGEX_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affreach/affine.hpp"
#include "affreach/errors.hpp"

namespace affreach {

enum class RegexKind { kEmptySet, kEpsilon, kLiteral, kConcat, kUnion, kStar };

class Regex;
using RegexPtr = std::shared_ptr<const Regex>;

// Immutable AST node. Subtrees are shared, so size() counts the tree, not
// the DAG: it is the node count of the fully unshared expression.
class Regex {
 public:
  RegexKind kind() const { return kind_; }
  bool is(RegexKind k) const { return kind_ == k; }
  MapIndex literal() const { return literal_; }
  const std::vector<RegexPtr>& children() const { return children_; }
  const RegexPtr& body() const { return children_.front(); }
  std::size_t size() const { return size_; }

 private:
  friend class RegexBuilder;

  Regex(RegexKind kind, MapIndex literal, std::vector<RegexPtr> children)
      : kind_(kind), literal_(literal), children_(std::move(children)) {
    std::size_t s = 1;
    for (const RegexPtr& c : children_) {
      s = (s > std::numeric_limits<std::size_t>::max() - c->size())
              ? std::numeric_limits<std::size_t>::max()
              : s + c->size();
    }
    size_ = s;
  }

  RegexKind kind_;
  MapIndex literal_ = 0;
  std::vector<RegexPtr> children_;
  std::size_t size_ = 1;
};

// Creates nodes, flattening nested concatenations and unions and refusing
// any node whose size exceeds the cap. Construction also applies
// (a*)* = a*, e* = e and drops e from concatenations; it never removes
// the empty set, which is eliminate_empty's job.
class RegexBuilder {
 public:
  explicit RegexBuilder(std::size_t max_nodes = 1'000'000)
      : max_nodes_(max_nodes) {}

  std::size_t max_nodes() const { return max_nodes_; }
  // Largest expression (or clause list) built so far; never above the cap.
  std::size_t peak_nodes() const { return peak_; }

  // Admits a structure of the given size or throws.
  void note(std::size_t nodes) {
    if (nodes > max_nodes_) {
      throw ResourceExceeded("regular expression larger than " +
                                 std::to_string(max_nodes_) + " nodes",
                             peak_, max_nodes_);
    }
    peak_ = std::max(peak_, nodes);
  }

  RegexPtr empty_set() { return make(RegexKind::kEmptySet, 0, {}); }
  RegexPtr epsilon() { return make(RegexKind::kEpsilon, 0, {}); }
  RegexPtr literal(MapIndex i) { return make(RegexKind::kLiteral, i, {}); }

  RegexPtr concat(const std::vector<RegexPtr>& parts) {
    std::vector<RegexPtr> flat;
    for (const RegexPtr& p : parts) {
      if (p->is(RegexKind::kConcat)) {
        flat.insert(flat.end(), p->children().begin(), p->children().end());
      } else if (!p->is(RegexKind::kEpsilon)) {
        flat.push_back(p);
      }
    }
    if (flat.empty()) return epsilon();
    if (flat.size() == 1) return flat.front();
    return make(RegexKind::kConcat, 0, std::move(flat));
  }
  RegexPtr concat(RegexPtr a, RegexPtr b) {
    return concat(std::vector<RegexPtr>{std::move(a), std::move(b)});
  }

  RegexPtr union_of(const std::vector<RegexPtr>& parts) {
    std::vector<RegexPtr> flat;
    auto add = [&](const RegexPtr& p) {
      if (std::find(flat.begin(), flat.end(), p) == flat.end()) {
        flat.push_back(p);
      }
    };
    for (const RegexPtr& p : parts) {
      if (p->is(RegexKind::kUnion)) {
        for (const RegexPtr& c : p->children()) add(c);
      } else {
        add(p);
      }
    }
    if (flat.empty()) return empty_set();
    if (flat.size() == 1) return flat.front();
    return make(RegexKind::kUnion, 0, std::move(flat));
  }
  RegexPtr union_of(RegexPtr a, RegexPtr b) {
    return union_of(std::vector<RegexPtr>{std::move(a), std::move(b)});
  }

  RegexPtr star(const RegexPtr& body) {
    if (body->is(RegexKind::kStar) || body->is(RegexKind::kEpsilon)) {
      return body;
    }
    return make(RegexKind::kStar, 0, {body});
  }

 private:
  RegexPtr make(RegexKind kind, MapIndex literal,
                std::vector<RegexPtr> children) {
    std::size_t size = 1;
    for (const RegexPtr& c : children) {
      size = (size > std::numeric_limits<std::size_t>::max() - c->size())
                 ? std::numeric_limits<std::size_t>::max()
                 : size + c->size();
    }
    note(size);  // before allocating, so an oversized node never exists
    return RegexPtr(new Regex(kind, literal, std::move(children)));
  }

  std::size_t max_nodes_;
  std::size_t peak_ = 0;
};

inline std::string to_string(const RegexPtr& r) {
  switch (r->kind()) {
    case RegexKind::kEmptySet: return "{}";
    case RegexKind::kEpsilon: return "e";
    case RegexKind::kLiteral: return std::to_string(r->literal());
    case RegexKind::kStar: {
      const RegexPtr& b = r->body();
      const bool atom = b->is(RegexKind::kLiteral) ||
                        b->is(RegexKind::kConcat) || b->is(RegexKind::kUnion);
      return atom ? to_string(b) + "*" : "(" + to_string(b) + ")*";
    }
    case RegexKind::kConcat:
    case RegexKind::kUnion: {
      const char* sep = r->is(RegexKind::kConcat) ? " " : "|";
      std::string s = "(";
      for (std::size_t i = 0; i < r->children().size(); ++i) {
        if (i) s += sep;
        s += to_string(r->children()[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

inline bool structurally_equal(const RegexPtr& l, const RegexPtr& r) {
  if (l == r) return true;
  if (l->kind() != r->kind() || l->literal() != r->literal() ||
      l->children().size() != r->children().size()) {
    return false;
  }
  for (std::size_t i = 0; i < l->children().size(); ++i) {
    if (!structurally_equal(l->children()[i], r->children()[i])) return false;
  }
  return true;
}

// Applies E|{} = E, E{} = {} and {}* = e bottom-up. The result contains the
// empty set only if it is the empty set. Subtrees without the empty set are
// returned as-is.
inline RegexPtr eliminate_empty(const RegexPtr& r, RegexBuilder& builder) {
  std::unordered_map<const Regex*, RegexPtr> memo;
  auto rec = [&](auto& self, const RegexPtr& e) -> RegexPtr {
    if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
    RegexPtr out = e;
    switch (e->kind()) {
      case RegexKind::kEmptySet:
      case RegexKind::kEpsilon:
      case RegexKind::kLiteral:
        break;
      case RegexKind::kStar: {
        RegexPtr b = self(self, e->body());
        if (b->is(RegexKind::kEmptySet)) {
          out = builder.epsilon();
        } else if (b != e->body()) {
          out = builder.star(b);
        }
        break;
      }
      case RegexKind::kConcat:
      case RegexKind::kUnion: {
        const bool is_concat = e->is(RegexKind::kConcat);
        std::vector<RegexPtr> kept;
        bool changed = false;
        bool annihilated = false;
        for (const RegexPtr& c : e->children()) {
          RegexPtr nc = self(self, c);
          changed |= (nc != c);
          if (nc->is(RegexKind::kEmptySet)) {
            changed = true;
            if (is_concat) {
              annihilated = true;
              break;
            }
            continue;
          }
          kept.push_back(std::move(nc));
        }
        if (annihilated) {
          out = builder.empty_set();
        } else if (changed) {
          out = is_concat ? builder.concat(kept) : builder.union_of(kept);
        }
        break;
      }
    }
    memo.emplace(e.get(), out);
    return out;
  };
  return rec(rec, r);
}

inline bool has_negative_literal(const RegexPtr& r, const AffineSystem& sys) {
  std::unordered_map<const Regex*, bool> memo;
  auto rec = [&](auto& self, const RegexPtr& e) -> bool {
    if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
    bool neg = false;
    if (e->is(RegexKind::kLiteral)) {
      neg = sys.map(e->literal()).a < 0;
    } else {
      for (const RegexPtr& c : e->children()) {
        if (self(self, c)) {
          neg = true;
          break;
        }
      }
    }
    memo.emplace(e.get(), neg);
    return neg;
  };
  return rec(rec, r);
}

// A union-free disjunct: each factor is a Literal or a Star node.
using Clause = std::vector<RegexPtr>;

inline RegexPtr clause_regex(const Clause& c, RegexBuilder& builder) {
  return builder.concat(c);
}

// Rewrites an empty-set-free expression into clauses S1|...|SM using
// a(b|c) = ab|ac, (a|b)c = ac|bc and (a|b)* = (a* b*)*. Star bodies are made
// union-free by the last identity only; they are never distributed out.
inline std::vector<Clause> to_dnf(const RegexPtr& r, RegexBuilder& builder) {
  using Clauses = std::vector<Clause>;
  struct Weighted {
    Clauses clauses;
    std::size_t nodes = 0;
  };
  auto weight = [](const Clause& c) {
    std::size_t w = 0;
    for (const RegexPtr& f : c) w += f->size();
    return w;
  };
  std::unordered_map<const Regex*, std::shared_ptr<const Weighted>> memo;

  auto rec = [&](auto& self,
                 const RegexPtr& e) -> std::shared_ptr<const Weighted> {
    if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
    auto out = std::make_shared<Weighted>();
    switch (e->kind()) {
      case RegexKind::kEmptySet:
        throw PreconditionViolation("to_dnf on an expression containing {}");
      case RegexKind::kEpsilon:
        out->clauses = {Clause{}};
        break;
      case RegexKind::kLiteral:
        out->clauses = {Clause{e}};
        out->nodes = 1;
        break;
      case RegexKind::kUnion:
        for (const RegexPtr& c : e->children()) {
          auto sub = self(self, c);
          builder.note(out->nodes + sub->nodes);
          out->clauses.insert(out->clauses.end(), sub->clauses.begin(),
                              sub->clauses.end());
          out->nodes += sub->nodes;
        }
        break;
      case RegexKind::kConcat: {
        out->clauses = {Clause{}};
        for (const RegexPtr& c : e->children()) {
          auto sub = self(self, c);
          // Size of the product before building it.
          const std::size_t n_left = out->clauses.size();
          const std::size_t n_right = sub->clauses.size();
          const long double est =
              static_cast<long double>(out->nodes) * n_right +
              static_cast<long double>(sub->nodes) * n_left;
          if (est > static_cast<long double>(builder.max_nodes()) ||
              static_cast<long double>(n_left) * n_right >
                  static_cast<long double>(builder.max_nodes())) {
            builder.note(builder.max_nodes() + 1);
          }
          Clauses next;
          next.reserve(n_left * n_right);
          std::size_t nodes = 0;
          for (const Clause& a : out->clauses) {
            for (const Clause& b : sub->clauses) {
              Clause ab = a;
              ab.insert(ab.end(), b.begin(), b.end());
              nodes += weight(ab);
              next.push_back(std::move(ab));
            }
          }
          builder.note(nodes);
          out->clauses = std::move(next);
          out->nodes = nodes;
        }
        break;
      }
      case RegexKind::kStar: {
        auto sub = self(self, e->body());
        std::vector<RegexPtr> parts;
        for (const Clause& c : sub->clauses) {
          if (!c.empty()) parts.push_back(builder.concat(c));
        }
        if (parts.empty()) {
          out->clauses = {Clause{}};
          break;
        }
        RegexPtr body;
        if (parts.size() == 1) {
          body = parts.front();
        } else {
          for (RegexPtr& p : parts) p = builder.star(p);
          body = builder.concat(parts);
        }
        RegexPtr s = builder.star(body);
        out->clauses = {Clause{s}};
        out->nodes = s->size();
        break;
      }
    }
    memo.emplace(e.get(), out);
    return out;
  };
  return rec(rec, r)->clauses;
}

// Every word of L(r) with at most max_len letters.
inline std::set<Word> enumerate_language(const RegexPtr& r,
                                         std::size_t max_len,
                                         std::size_t max_words = 1'000'000) {
  using Lang = std::set<Word>;
  auto check = [&](const Lang& l) {
    if (l.size() > max_words) {
      throw ResourceExceeded("language enumeration beyond " +
                             std::to_string(max_words) + " words");
    }
  };
  auto product = [&](const Lang& a, const Lang& b) {
    Lang out;
    for (const Word& u : a) {
      for (const Word& v : b) {
        if (u.size() + v.size() > max_len) continue;
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        out.insert(std::move(uv));
      }
    }
    check(out);
    return out;
  };
  std::unordered_map<const Regex*, Lang> memo;
  auto rec = [&](auto& self, const RegexPtr& e) -> const Lang& {
    if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
    Lang out;
    switch (e->kind()) {
      case RegexKind::kEmptySet:
        break;
      case RegexKind::kEpsilon:
        out.insert(Word{});
        break;
      case RegexKind::kLiteral:
        if (max_len >= 1) out.insert(Word{e->literal()});
        break;
      case RegexKind::kUnion:
        for (const RegexPtr& c : e->children()) {
          const Lang& l = self(self, c);
          out.insert(l.begin(), l.end());
        }
        check(out);
        break;
      case RegexKind::kConcat:
        out.insert(Word{});
        for (const RegexPtr& c : e->children()) out = product(out, self(self, c));
        break;
      case RegexKind::kStar: {
        const Lang body = self(self, e->body());
        out.insert(Word{});
        for (;;) {
          Lang next = product(out, body);
          next.insert(out.begin(), out.end());
          if (next.size() == out.size()) break;
          out = std::move(next);
        }
        break;
      }
    }
    return memo.emplace(e.get(), std::move(out)).first->second;
  };
  return rec(rec, r);
}

inline std::set<Word> enumerate_clauses(const std::vector<Clause>& clauses,
                                        std::size_t max_len,
                                        RegexBuilder& builder) {
  std::set<Word> out;
  for (const Clause& c : clauses) {
    auto l = enumerate_language(clause_regex(c, builder), max_len);
    out.insert(l.begin(), l.end());
  }
  return out;
}

}  // namespace affreach

#endif  // AFFREACH_REGEX_HPP_
