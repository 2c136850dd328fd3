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

#include "evmdiff/strategy.h"

#include <array>

#include "evmdiff/cast.h"
#include "evmdiff/errors.h"

namespace evmdiff {
namespace {

constexpr std::array<std::string_view, 5> kNames = {"OddComb", "EvenComb", "ExtremeComb",
                                                    "RandomComb", "AllComb"};

}  // namespace

std::string_view StrategyName(StrategyChoice s) { return kNames[static_cast<size_t>(s)]; }

std::optional<StrategyChoice> StrategyFromName(std::string_view name) {
  for (size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<StrategyChoice>(i);
  }
  return std::nullopt;
}

StrategyChoice ResolveStrategy(StrategyChoice choice, Rng& rng) {
  if (choice != StrategyChoice::kAllComb) return choice;
  return static_cast<StrategyChoice>(UniformIndex(rng, 4));
}

std::vector<MutatorId> SelectMutators(const std::vector<MutatorId>& ordered,
                                      StrategyChoice choice, Rng& rng) {
  std::vector<MutatorId> out;
  switch (choice) {
    case StrategyChoice::kOddComb:
      for (size_t i = 0; i < ordered.size(); i += 2) out.push_back(ordered[i]);
      break;
    case StrategyChoice::kEvenComb:
      for (size_t i = 1; i < ordered.size(); i += 2) out.push_back(ordered[i]);
      break;
    case StrategyChoice::kExtremeComb:
      if (!ordered.empty()) out = {ordered.front(), ordered.back()};
      break;
    case StrategyChoice::kRandomComb:
      if (!ordered.empty()) out = {ordered[UniformIndex(rng, ordered.size())]};
      break;
    case StrategyChoice::kAllComb:
      return SelectMutators(ordered, ResolveStrategy(choice, rng), rng);
  }
  return out;
}

ContractMutation MutateContract(const ContractAst& contract, const std::vector<MutatorId>& ordered,
                                StrategyChoice choice, Rng& rng) {
  StrategyChoice resolved = ResolveStrategy(choice, rng);
  ContractMutation result{{contract, {}, {}}, resolved, SelectMutators(ordered, resolved, rng)};
  for (MutatorId id : result.selected) {
    try {
      MutationOutcome step = ApplyMutator(BuildCast(result.outcome.mutated), id, rng);
      result.outcome.mutated = std::move(step.mutated);
      result.outcome.applied.push_back(id);
      for (auto& s : step.sites) result.outcome.sites.push_back(std::move(s));
    } catch (const NoApplicableSite&) {
      continue;
    }
  }
  if (result.outcome.applied.empty()) throw NothingMutated();
  return result;
}

}  // namespace evmdiff
