// Copyright 2026 The evmdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVMDIFF_MUTATORS_H_
#define EVMDIFF_MUTATORS_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "evmdiff/ast.h"
#include "evmdiff/cast.h"
#include "evmdiff/rng.h"

namespace evmdiff {

// Mutator ids, 1-based.
using MutatorId = int;

inline constexpr MutatorId kLocalVariable = 1;
inline constexpr MutatorId kConditionalOperator = 2;
inline constexpr MutatorId kArithmeticOperator = 3;
inline constexpr MutatorId kFunctionProperty = 4;
inline constexpr MutatorId kLoopOperator = 5;
inline constexpr MutatorId kAssertStatement = 6;
inline constexpr MutatorId kReturnStatement = 7;
inline constexpr MutatorId kControlStructure = 8;

inline constexpr int kNumMutators = 8;
inline constexpr std::array<MutatorId, kNumMutators> kAllMutators = {1, 2, 3, 4, 5, 6, 7, 8};

std::string_view MutatorName(MutatorId id);

// Amount added to a loop bound literal by the loop operator mutator.
inline constexpr unsigned kLoopBoundDelta = 99;

struct MutationOutcome {
  ContractAst mutated;
  std::vector<MutatorId> applied;
  // Node paths touched, each relative to the tree its mutator was applied to.
  std::vector<std::string> sites;
};

// Applies one mutator. The result always validates and compiles. Mutators
// 1-4 rewrite every applicable site, 5-8 one randomly chosen site. Throws
// NoApplicableSite when the contract lacks the construct or no candidate
// survives validation.
MutationOutcome ApplyMutator(const CastTree& cast, MutatorId id, Rng& rng);

}  // namespace evmdiff

#endif  // EVMDIFF_MUTATORS_H_
