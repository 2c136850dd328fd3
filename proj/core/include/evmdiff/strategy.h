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

#ifndef EVMDIFF_STRATEGY_H_
#define EVMDIFF_STRATEGY_H_

#include <optional>
#include <string_view>
#include <vector>

#include "evmdiff/ast.h"
#include "evmdiff/mutators.h"
#include "evmdiff/rng.h"

namespace evmdiff {

enum class StrategyChoice { kOddComb, kEvenComb, kExtremeComb, kRandomComb, kAllComb };

std::string_view StrategyName(StrategyChoice s);
std::optional<StrategyChoice> StrategyFromName(std::string_view name);

// AllComb delegates to one of the other four, uniformly; others map to
// themselves without consuming randomness.
StrategyChoice ResolveStrategy(StrategyChoice choice, Rng& rng);

// `ordered` is the weight-descending mutator queue. Positions are 1-based:
// OddComb keeps 1,3,5,..., EvenComb 2,4,6,..., ExtremeComb the first and
// last, RandomComb one id drawn uniformly regardless of weight.
std::vector<MutatorId> SelectMutators(const std::vector<MutatorId>& ordered,
                                      StrategyChoice choice, Rng& rng);

struct ContractMutation {
  MutationOutcome outcome;
  StrategyChoice resolved;  // the concrete strategy AllComb delegated to
  std::vector<MutatorId> selected;
};

// Selects mutators and applies them in order, skipping inapplicable ones.
// Throws NothingMutated if none applied.
ContractMutation MutateContract(const ContractAst& contract, const std::vector<MutatorId>& ordered,
                                StrategyChoice choice, Rng& rng);

}  // namespace evmdiff

#endif  // EVMDIFF_STRATEGY_H_
