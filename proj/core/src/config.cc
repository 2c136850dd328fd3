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

#include "evmdiff/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "evmdiff/errors.h"
#include "evmdiff/opcodes.h"
#include "json.hpp"

namespace evmdiff {
namespace {

using nlohmann::json;

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

template <typename T>
T Get(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config field '") + key + "' has the wrong type");
  }
}

}  // namespace

CampaignConfig ConfigFromJson(std::string_view text, const std::filesystem::path& base_dir) {
  json j = json::parse(text, nullptr, false, true);
  if (j.is_discarded() || !j.is_object()) throw ConfigError("config is not a JSON object");
  static const std::set<std::string> kKnown = {
      "corpus",       "seeds",        "target",       "backends",     "strategy",
      "iterations",   "wall_budget_s", "seed",        "limits",       "gas_schedule",
      "gas_variant",  "value_pools",  "fixed_inputs", "regenerate_inputs", "pool_cap",
      "alpha",        "resume"};
  for (const auto& [key, _] : j.items()) {
    if (!kKnown.count(key)) throw ConfigError("unknown config field '" + key + "'");
  }

  CampaignConfig cfg;
  if (j.contains("corpus")) cfg.corpus = Resolve(base_dir, Get<std::string>(j, "corpus", ""));
  for (const auto& s : Get<std::vector<std::string>>(j, "seeds", {})) {
    cfg.seeds.push_back(Resolve(base_dir, s));
  }
  cfg.target = Get<std::string>(j, "target", "");

  if (j.contains("backends")) {
    if (!j["backends"].is_array()) throw ConfigError("'backends' must be an array");
    for (const auto& b : j["backends"]) {
      BackendSpec spec;
      if (b.is_string()) {
        spec.profile = ProfileFromName(b.get<std::string>());
        if (!spec.profile) throw ConfigError("unknown backend profile '" + b.get<std::string>() + "'");
        spec.id = b.get<std::string>();
      } else if (b.is_object()) {
        spec.id = Get<std::string>(b, "id", "");
        if (b.contains("profile")) {
          auto name = Get<std::string>(b, "profile", "");
          spec.profile = ProfileFromName(name);
          if (!spec.profile) throw ConfigError("unknown backend profile '" + name + "'");
          if (spec.id.empty()) spec.id = name;
        } else if (b.contains("external")) {
          spec.executable = Resolve(base_dir, Get<std::string>(b, "external", ""));
          spec.args = Get<std::vector<std::string>>(b, "args", {});
          if (spec.id.empty()) spec.id = spec.executable.filename().string();
        } else {
          throw ConfigError("backend entry needs 'profile' or 'external'");
        }
      } else {
        throw ConfigError("backend entries must be strings or objects");
      }
      cfg.backends.push_back(std::move(spec));
    }
  }

  if (j.contains("strategy")) {
    auto name = Get<std::string>(j, "strategy", "");
    auto s = StrategyFromName(name);
    if (!s) throw ConfigError("unknown strategy '" + name + "'");
    cfg.strategy = *s;
  }
  if (j.contains("iterations")) {
    if (!j["iterations"].is_number_integer() || j["iterations"].get<int64_t>() < 0) {
      throw ConfigError("'iterations' must be a non-negative integer");
    }
    cfg.iterations = j["iterations"].get<uint64_t>();
  }
  cfg.wall_budget = std::chrono::milliseconds(
      static_cast<int64_t>(Get<double>(j, "wall_budget_s", 0.0) * 1000));
  cfg.rng_seed = Get<uint64_t>(j, "seed", cfg.rng_seed);

  if (j.contains("limits")) {
    const json& l = j["limits"];
    cfg.limits.gas_limit = Get<uint64_t>(l, "gas_limit", cfg.limits.gas_limit);
    cfg.limits.step_limit = Get<uint64_t>(l, "step_limit", cfg.limits.step_limit);
    cfg.limits.wall_limit = std::chrono::milliseconds(
        Get<uint64_t>(l, "wall_limit_ms", static_cast<uint64_t>(cfg.limits.wall_limit.count())));
  }
  if (j.contains("gas_schedule")) {
    cfg.profiles.base = LoadGasSchedule(Resolve(base_dir, Get<std::string>(j, "gas_schedule", "")));
  }
  if (j.contains("gas_variant")) {
    const json& g = j["gas_variant"];
    if (g.contains("cost_delta")) {
      cfg.profiles.gas_variant.cost_delta = Get<std::map<std::string, int64_t>>(g, "cost_delta", {});
    }
    cfg.profiles.gas_variant.refund_cap_divisor =
        Get<uint64_t>(g, "refund_cap_divisor", cfg.profiles.gas_variant.refund_cap_divisor);
  }
  if (j.contains("value_pools")) cfg.pools.OverrideFromJson(j["value_pools"].dump());
  if (j.contains("fixed_inputs")) {
    for (const auto& [name, v] : j["fixed_inputs"].items()) {
      cfg.fixed_inputs[name] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  cfg.regenerate_inputs = Get<bool>(j, "regenerate_inputs", false);
  cfg.resume = Get<bool>(j, "resume", false);
  cfg.pool_cap = Get<size_t>(j, "pool_cap", cfg.pool_cap);
  cfg.alpha = Get<double>(j, "alpha", cfg.alpha);
  return cfg;
}

CampaignConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ConfigFromJson(ss.str(), path.parent_path());
}

void CheckConfig(const CampaignConfig& cfg) {
  if (cfg.iterations == 0) throw ConfigError("iteration budget must be positive");
  if (cfg.backends.size() < 2) {
    throw ConfigError("a differential campaign needs at least 2 backends, got " +
                      std::to_string(cfg.backends.size()));
  }
  std::set<std::string> ids;
  for (const auto& b : cfg.backends) {
    if (!ids.insert(b.id).second) throw ConfigError("duplicate backend id '" + b.id + "'");
  }
  if (cfg.seeds.empty()) throw ConfigError("no initial seeds configured");
  if (cfg.limits.gas_limit == 0 || cfg.limits.step_limit == 0) {
    throw ConfigError("gas and step limits must be positive");
  }
  if (cfg.limits.wall_limit.count() <= 0) throw ConfigError("wall limit must be positive");
  if (cfg.pool_cap == 0) throw ConfigError("pool cap must be positive");
  if (!(cfg.alpha >= 0)) throw ConfigError("alpha must be non-negative");
}

std::vector<BackendHandle> BuildRoster(const CampaignConfig& cfg) {
  std::vector<BackendHandle> roster;
  for (const auto& spec : cfg.backends) {
    if (spec.profile) {
      roster.push_back(MakeBackend(*spec.profile, cfg.profiles, spec.id));
    } else {
      roster.push_back(MakeExternalBackend(spec.id, spec.executable, spec.args));
    }
  }
  return roster;
}

}  // namespace evmdiff
