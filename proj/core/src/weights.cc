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

#include "evmdiff/weights.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "evmdiff/errors.h"
#include "json.hpp"

namespace evmdiff {

MutatorWeights::MutatorWeights() { w_.fill(1.0 / kNumMutators); }

std::vector<MutatorId> MutatorWeights::Ordered() const {
  std::vector<MutatorId> ids(kAllMutators.begin(), kAllMutators.end());
  std::stable_sort(ids.begin(), ids.end(),
                   [&](MutatorId a, MutatorId b) { return (*this)[a] > (*this)[b]; });
  return ids;
}

void MutatorWeights::Update(const std::vector<MutatorId>& applied, double delta_diff,
                            double diff_after, double alpha) {
  if (!(delta_diff > 0) || applied.empty()) return;
  double gain = delta_diff / (diff_after + 1e-9);
  std::array<bool, kNumMutators> credited{};
  for (MutatorId id : applied) credited[static_cast<size_t>(id - 1)] = true;
  for (size_t i = 0; i < w_.size(); ++i) {
    if (credited[i]) w_[i] *= 1.0 + alpha * gain;
  }
  double sum = std::accumulate(w_.begin(), w_.end(), 0.0);
  for (double& x : w_) x /= sum;
}

std::string MutatorWeights::ToJson() const {
  nlohmann::ordered_json j;
  for (MutatorId id : kAllMutators) j[std::to_string(id)] = (*this)[id];
  return j.dump(2) + "\n";
}

MutatorWeights MutatorWeights::FromJson(std::string_view text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ConfigError("weights must be a JSON object");
  MutatorWeights w;
  double sum = 0;
  for (MutatorId id : kAllMutators) {
    auto key = std::to_string(id);
    if (!j.contains(key) || !j[key].is_number()) throw ConfigError("weights lack mutator " + key);
    double v = j[key].get<double>();
    if (!(v >= 0) || !std::isfinite(v)) throw ConfigError("weight for mutator " + key + " is invalid");
    w.w_[static_cast<size_t>(id - 1)] = v;
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-6) throw ConfigError("weights do not sum to 1");
  return w;
}

void MutatorWeights::Save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << ToJson();
}

MutatorWeights MutatorWeights::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJson(ss.str());
}

}  // namespace evmdiff
