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

#ifndef AFFREACH_ERRORS_HPP_
#define AFFREACH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affreach {

// A configured cap (regex nodes, search vertices, automaton states) was hit.
// Decision procedures surface this instead of returning a verdict.
// peak is the largest structure actually built before the refusal.
class ResourceExceeded : public std::runtime_error {
 public:
  explicit ResourceExceeded(const std::string& what, std::size_t peak = 0,
                            std::size_t limit = 0)
      : std::runtime_error("resource exceeded: " + what),
        peak_(peak),
        limit_(limit) {}

  std::size_t peak() const { return peak_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t peak_;
  std::size_t limit_;
};

// An operation was called outside its documented domain.
class PreconditionViolation : public std::logic_error {
 public:
  explicit PreconditionViolation(const std::string& what)
      : std::logic_error("precondition violated: " + what) {}
};

// The verdict is known but building a certificate would exceed the caps.
class WitnessUnavailable : public std::runtime_error {
 public:
  explicit WitnessUnavailable(const std::string& what)
      : std::runtime_error("witness unavailable: " + what) {}
};

}  // namespace affreach

#endif  // AFFREACH_ERRORS_HPP_
