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

// Umbrella header.

#ifndef AFFREACH_AFFREACH_HPP_
#define AFFREACH_AFFREACH_HPP_

#include "affreach/affine.hpp"
#include "affreach/errors.hpp"
#include "affreach/interval_solver.hpp"
#include "affreach/mod_automaton.hpp"
#include "affreach/monotone.hpp"
#include "affreach/oracle.hpp"
#include "affreach/regex.hpp"
#include "affreach/solver.hpp"
#include "affreach/verdict.hpp"

#endif  // AFFREACH_AFFREACH_HPP_
