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

#include "evmdiff/scheduler.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "evmdiff/errors.h"
#include "evmdiff/parser.h"
#include "evmdiff/printer.h"
#include "json.hpp"

namespace evmdiff {

SeedPool::SeedPool(size_t cap) : cap_(std::max<size_t>(cap, 1)) {}

void SeedPool::Rescale() {
  for (auto& e : entries_) {
    e.diff_pri = record_ > 0 ? kMaxDiffPriority * e.admission_diff / record_ : 0.0;
    e.diff_pri = std::clamp(e.diff_pri, 0.0, kMaxDiffPriority);
  }
}

void SeedPool::EvictIfFull() {
  while (entries_.size() > cap_) {
    auto victim = std::min_element(entries_.begin(), entries_.end(),
                                   [](const SeedEntry& a, const SeedEntry& b) {
                                     return a.diff_pri < b.diff_pri;
                                   });
    entries_.erase(victim);
  }
}

void SeedPool::AddInitial(ContractAst contract, double diff, uint64_t lineage) {
  SeedEntry e;
  e.contract = std::move(contract);
  e.admission_diff = std::max(diff, 0.0);
  e.lineage = lineage;
  record_ = std::max(record_, e.admission_diff);
  entries_.push_back(std::move(e));
  Rescale();
  EvictIfFull();
}

const SeedEntry& SeedPool::Prioritize() {
  if (entries_.empty()) throw EmptyPool();
  size_t best = 0;
  auto priority = [](const SeedEntry& e) { return e.diff_pri + static_cast<double>(e.time_pri); };
  for (size_t i = 1; i < entries_.size(); ++i) {
    double pi = priority(entries_[i]);
    double pb = priority(entries_[best]);
    if (pi > pb || (pi == pb && entries_[i].admitted_at < entries_[best].admitted_at)) best = i;
  }
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i == best) {
      entries_[i].time_pri = 0;
    } else {
      ++entries_[i].time_pri;
    }
  }
  return entries_[best];
}

bool SeedPool::Admit(ContractAst contract, double diff, uint64_t iteration, uint64_t lineage) {
  if (!(diff > record_)) return false;
  record_ = diff;
  SeedEntry e;
  e.contract = std::move(contract);
  e.admitted_at = iteration;
  e.admission_diff = diff;
  e.lineage = lineage;
  entries_.push_back(std::move(e));
  Rescale();
  EvictIfFull();
  return true;
}

void SeedPool::Save(const std::filesystem::path& dir) const {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "seeds");
  nlohmann::ordered_json manifest;
  manifest["record"] = record_;
  manifest["entries"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    std::string file = "seeds/" + std::to_string(i) + ".msol";
    std::ofstream(dir / file) << EmitSource(e.contract);
    manifest["entries"].push_back({{"file", file},
                                   {"admission_diff", e.admission_diff},
                                   {"diff_pri", e.diff_pri},
                                   {"time_pri", e.time_pri},
                                   {"admitted_at", e.admitted_at},
                                   {"lineage", e.lineage}});
  }
  std::ofstream out(dir / "manifest.json");
  if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
  out << manifest.dump(2) << "\n";
}

SeedPool SeedPool::Load(const std::filesystem::path& dir, size_t cap) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw ConfigError("no manifest.json in " + dir.string());
  std::stringstream ss;
  ss << in.rdbuf();
  auto j = nlohmann::json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) throw ConfigError("malformed manifest.json in " + dir.string());
  SeedPool pool(cap);
  try {
    pool.record_ = j.at("record").get<double>();
    for (const auto& m : j.at("entries")) {
      SeedEntry e;
      e.contract = ParseFile(dir / m.at("file").get<std::string>());
      e.admission_diff = m.at("admission_diff").get<double>();
      e.diff_pri = m.at("diff_pri").get<double>();
      e.time_pri = m.at("time_pri").get<uint64_t>();
      e.admitted_at = m.at("admitted_at").get<uint64_t>();
      e.lineage = m.at("lineage").get<uint64_t>();
      pool.entries_.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed manifest.json: ") + e.what());
  }
  return pool;
}

}  // namespace evmdiff
