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

#include "evmdiff/findings.h"

#include <openssl/sha.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "evmdiff/compiler.h"
#include "evmdiff/errors.h"
#include "evmdiff/harness.h"
#include "evmdiff/parser.h"
#include "json.hpp"

namespace evmdiff {
namespace {

using ojson = nlohmann::ordered_json;

constexpr int kFindingFormat = 1;

ojson RosterJson(const std::vector<BackendSpec>& roster) {
  ojson arr = ojson::array();
  for (const auto& b : roster) {
    ojson e = {{"id", b.id}};
    if (b.profile) {
      e["profile"] = ProfileName(*b.profile);
    } else {
      e["external"] = b.executable.string();
      e["args"] = b.args;
    }
    arr.push_back(e);
  }
  return arr;
}

Bytes Hex(const ojson& j, const char* key) {
  auto b = FromHex(j.at(key).get<std::string>());
  if (!b) throw InvalidFinding(std::string("bad hex in '") + key + "'");
  return *b;
}

}  // namespace

std::string Sha256Hex(std::string_view text) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), digest);
  return ToHex(std::span<const uint8_t>(digest, sizeof digest));
}

bool IsFinding(const DiffReport& diff) {
  return diff.out_vul || diff.classification == Classification::kCrashAsymmetry;
}

std::string FindingToJson(const InconsistencyRecord& rec) {
  ojson j;
  j["format"] = kFindingFormat;
  j["iteration"] = rec.iteration;
  j["classification"] = ClassificationName(rec.diff.classification);
  j["target"] = rec.target;
  j["calldata"] = ToHex(rec.calldata);
  j["inputs"] = rec.inputs;
  j["roster"] = RosterJson(rec.roster);
  j["limits"] = {{"gas_limit", rec.limits.gas_limit},
                 {"step_limit", rec.limits.step_limit},
                 {"wall_limit_ms", rec.limits.wall_limit.count()}};
  j["gas_schedule"] = ojson::parse(GasScheduleToJson(rec.profiles.base));
  j["gas_variant"] = {{"cost_delta", rec.profiles.gas_variant.cost_delta},
                      {"refund_cap_divisor", rec.profiles.gas_variant.refund_cap_divisor}};
  ojson records = ojson::array();
  for (const auto& r : rec.records) {
    records.push_back({{"backend_id", r.backend_id},
                       {"status", ExecStatusName(r.status)},
                       {"error", r.error},
                       {"output", ToHex(r.output)},
                       {"gas_used", r.gas_used},
                       {"op_seq_len", r.op_seq.size()},
                       {"wall_time_ms", std::chrono::duration<double, std::milli>(r.wall_time).count()}});
  }
  j["records"] = records;
  ojson pairs = ojson::array();
  for (const auto& p : rec.diff.per_pair) {
    pairs.push_back({{"i", p.i}, {"j", p.j}, {"gas_diff", p.gas_diff}, {"op_diff", p.op_diff},
                     {"gas_abs", p.gas_abs}, {"op_abs", p.op_abs}});
  }
  j["diff"] = {{"aggregate_diff", rec.diff.aggregate_diff},
               {"out_vul", rec.diff.out_vul},
               {"per_pair", pairs}};
  j["source"] = rec.source;
  return j.dump(2) + "\n";
}

InconsistencyRecord FindingFromJson(std::string_view text) {
  auto j = ojson::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw InvalidFinding("finding is not a JSON object");
  InconsistencyRecord rec;
  try {
    if (j.at("format").get<int>() != kFindingFormat) throw InvalidFinding("unsupported finding format");
    rec.iteration = j.at("iteration").get<uint64_t>();
    rec.diff.classification = ClassificationFromName(j.at("classification").get<std::string>());
    rec.target = j.at("target").get<std::string>();
    rec.calldata = Hex(j, "calldata");
    rec.inputs = j.at("inputs").get<std::vector<std::string>>();
    for (const auto& b : j.at("roster")) {
      BackendSpec spec;
      spec.id = b.at("id").get<std::string>();
      if (b.contains("profile")) {
        spec.profile = ProfileFromName(b["profile"].get<std::string>());
        if (!spec.profile) throw InvalidFinding("unknown profile in roster");
      } else {
        spec.executable = b.at("external").get<std::string>();
        spec.args = b.at("args").get<std::vector<std::string>>();
      }
      rec.roster.push_back(std::move(spec));
    }
    const auto& l = j.at("limits");
    rec.limits.gas_limit = l.at("gas_limit").get<uint64_t>();
    rec.limits.step_limit = l.at("step_limit").get<uint64_t>();
    rec.limits.wall_limit = std::chrono::milliseconds(l.at("wall_limit_ms").get<int64_t>());
    rec.profiles.base = GasScheduleFromJson(j.at("gas_schedule").dump());
    const auto& g = j.at("gas_variant");
    rec.profiles.gas_variant.cost_delta = g.at("cost_delta").get<std::map<std::string, int64_t>>();
    rec.profiles.gas_variant.refund_cap_divisor = g.at("refund_cap_divisor").get<uint64_t>();
    for (const auto& r : j.at("records")) {
      ExecutionRecord er;
      er.backend_id = r.at("backend_id").get<std::string>();
      er.status = ExecStatusFromName(r.at("status").get<std::string>());
      er.error = r.at("error").get<std::string>();
      er.output = Hex(r, "output");
      er.gas_used = r.at("gas_used").get<uint64_t>();
      rec.records.push_back(std::move(er));
    }
    const auto& d = j.at("diff");
    rec.diff.aggregate_diff = d.at("aggregate_diff").get<double>();
    rec.diff.out_vul = d.at("out_vul").get<bool>();
    for (const auto& p : d.at("per_pair")) {
      rec.diff.per_pair.push_back(PairDiff{p.at("i").get<size_t>(), p.at("j").get<size_t>(),
                                           p.at("gas_diff").get<double>(),
                                           p.at("op_diff").get<double>(),
                                           p.at("gas_abs").get<uint64_t>(),
                                           p.at("op_abs").get<uint64_t>()});
    }
    rec.source = j.at("source").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidFinding(std::string("malformed finding: ") + e.what());
  } catch (const ConfigError& e) {
    throw InvalidFinding(std::string("malformed finding: ") + e.what());
  }
  return rec;
}

InconsistencyRecord LoadFinding(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidFinding("cannot read finding " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return FindingFromJson(ss.str());
}

FindingStore::FindingStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) {
    std::filesystem::create_directories(dir_);
    WriteIndex();
  }
}

bool FindingStore::Add(const InconsistencyRecord& rec) {
  std::string hash = Sha256Hex(rec.source);
  if (!seen_.insert({rec.diff.classification, hash}).second) return false;
  char prefix[32];
  std::snprintf(prefix, sizeof prefix, "%06llu-",
                static_cast<unsigned long long>(rec.iteration));
  Entry e{prefix + std::string(ClassificationName(rec.diff.classification)) + "-" +
              hash.substr(0, 12) + ".json",
          rec.iteration, rec.diff.classification, hash, rec.diff.aggregate_diff, {}};
  for (const auto& r : rec.records) e.statuses.emplace_back(r.backend_id, r.status);
  if (!dir_.empty()) {
    std::ofstream out(dir_ / e.file);
    if (!out) throw Error("cannot write finding " + (dir_ / e.file).string());
    out << FindingToJson(rec);
  }
  index_.push_back(std::move(e));
  WriteIndex();
  return true;
}

std::string FindingStore::IndexJson() const {
  ojson arr = ojson::array();
  for (const auto& e : index_) {
    ojson statuses = ojson::object();
    for (const auto& [id, st] : e.statuses) statuses[id] = ExecStatusName(st);
    arr.push_back({{"file", e.file},
                   {"iteration", e.iteration},
                   {"classification", ClassificationName(e.classification)},
                   {"source_sha256", e.hash},
                   {"aggregate_diff", e.aggregate_diff},
                   {"statuses", statuses}});
  }
  return ojson{{"findings", arr}}.dump(2) + "\n";
}

void FindingStore::WriteIndex() const {
  if (dir_.empty()) return;
  std::ofstream out(dir_ / "index.json");
  if (!out) throw Error("cannot write " + (dir_ / "index.json").string());
  out << IndexJson();
}

ReplayResult Replay(const InconsistencyRecord& rec, std::span<const BackendHandle> available) {
  if (!IsFinding(rec.diff)) {
    throw InvalidFinding("record is " + std::string(ClassificationName(rec.diff.classification)) +
                         "; only inconsistencies are stored as findings");
  }
  std::vector<BackendHandle> roster;
  for (const auto& spec : rec.roster) {
    auto it = std::find_if(available.begin(), available.end(),
                           [&](const BackendHandle& b) { return b->id() == spec.id; });
    if (it == available.end()) throw StaleFinding("backend '" + spec.id + "' is not available");
    roster.push_back(*it);
  }
  CompiledContract compiled = CompileContract(Parse(rec.source));
  ReplayResult out;
  out.records = RunAll(roster, compiled.code.code, rec.calldata, rec.limits);
  out.diff = Aggregate(out.records);
  return out;
}

ReplayResult Replay(const InconsistencyRecord& rec) {
  std::vector<BackendHandle> roster;
  for (const auto& spec : rec.roster) {
    if (spec.profile) {
      roster.push_back(MakeBackend(*spec.profile, rec.profiles, spec.id));
    } else if (std::filesystem::exists(spec.executable)) {
      roster.push_back(MakeExternalBackend(spec.id, spec.executable, spec.args));
    }
  }
  return Replay(rec, roster);
}

}  // namespace evmdiff
