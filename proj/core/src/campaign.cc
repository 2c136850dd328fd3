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

#include "evmdiff/campaign.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "evmdiff/compiler.h"
#include "evmdiff/errors.h"
#include "evmdiff/findings.h"
#include "evmdiff/harness.h"
#include "evmdiff/inputgen.h"
#include "evmdiff/parser.h"
#include "evmdiff/printer.h"
#include "evmdiff/scheduler.h"
#include "json.hpp"

namespace evmdiff {
namespace {

using ojson = nlohmann::ordered_json;

constexpr int kMutationRetries = 8;

// Stream ids for DeriveSeed, so mutation and input draws never share state.
constexpr uint64_t kMutationStream = 0;
constexpr uint64_t kInputStream = 1;

// Parameters are drawn once per initial seed and reused by every mutant
// descending from it.
struct Lineage {
  std::string target;
  GeneratedInput input;
};

const FunctionDecl* PickTarget(const ContractAst& ast, const std::string& wanted) {
  if (!wanted.empty()) {
    const FunctionDecl* fn = FindFunction(ast, wanted);
    if (fn && IsExternallyCallable(*fn)) return fn;
  }
  for (const auto& fn : ast.functions) {
    if (IsExternallyCallable(fn)) return &fn;
  }
  return nullptr;
}

std::vector<std::string> InputStrings(const std::vector<AbiValue>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.ToString());
  return out;
}

ContractMutation Mutate(const ContractAst& parent, const MutatorWeights& weights,
                        StrategyChoice strategy, Rng& rng) {
  for (int i = 0; i < kMutationRetries; ++i) {
    try {
      return MutateContract(parent, weights.Ordered(), strategy, rng);
    } catch (const NothingMutated&) {
    }
  }
  // Attribute edits apply to any contract with a function, which every
  // viable seed has.
  return MutateContract(parent, {kFunctionProperty}, StrategyChoice::kOddComb, rng);
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string OptionalIter(const std::optional<uint64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace

CampaignReport RunCampaign(const CampaignConfig& cfg, const CampaignHooks& hooks) {
  CheckConfig(cfg);
  auto start = std::chrono::steady_clock::now();
  auto warn = [&](const std::string& msg) {
    if (hooks.on_warning) hooks.on_warning(msg);
  };

  Rng rng(DeriveSeed(cfg.rng_seed, kMutationStream));
  Rng input_rng(DeriveSeed(cfg.rng_seed, kInputStream));
  std::vector<BackendHandle> roster = BuildRoster(cfg);
  FindingStore store(cfg.corpus.empty() ? std::filesystem::path() : cfg.corpus / "findings");
  SeedPool pool(cfg.pool_cap);
  MutatorWeights weights;
  std::vector<Lineage> lineages;
  std::vector<std::vector<bool>> crash_vectors;

  CampaignReport report;
  report.rng_seed = cfg.rng_seed;
  report.strategy = cfg.strategy;
  for (const auto& b : roster) report.roster.push_back(b->id());

  auto make_record = [&](uint64_t iteration, const ContractAst& ast, const Lineage& lin,
                         const Bytes& calldata, std::vector<ExecutionRecord> records,
                         const DiffReport& diff) {
    InconsistencyRecord rec;
    rec.iteration = iteration;
    rec.source = EmitSource(ast);
    rec.target = lin.target;
    rec.calldata = calldata;
    rec.inputs = InputStrings(lin.input.values);
    rec.roster = cfg.backends;
    rec.limits = cfg.limits;
    rec.profiles = cfg.profiles;
    rec.records = std::move(records);
    rec.diff = diff;
    return rec;
  };

  for (const auto& path : cfg.seeds) {
    try {
      ContractAst ast = ParseFile(path);
      const FunctionDecl* fn = PickTarget(ast, cfg.target);
      if (!fn) {
        warn(path.string() + ": no public or external function to call");
        continue;
      }
      CompiledContract compiled = CompileContract(ast);
      Lineage lin{fn->name, GenParams(*fn, cfg.pools, cfg.fixed_inputs, input_rng)};
      auto records = RunAll(roster, compiled.code.code, lin.input.calldata, cfg.limits);
      DiffReport diff = Aggregate(records);
      if (IsFinding(diff)) {
        store.Add(make_record(0, ast, lin, lin.input.calldata, std::move(records), diff));
      }
      pool.AddInitial(std::move(ast), diff.aggregate_diff, lineages.size());
      lineages.push_back(std::move(lin));
    } catch (const Error& e) {
      warn(path.string() + ": " + e.what());
    }
  }
  if (pool.empty()) throw NoViableSeeds();

  if (cfg.resume && !cfg.corpus.empty() && std::filesystem::exists(cfg.corpus / "manifest.json")) {
    SeedPool stored = SeedPool::Load(cfg.corpus, cfg.pool_cap);
    for (const auto& e : stored.entries()) {
      if (e.lineage < lineages.size()) pool.Admit(e.contract, e.admission_diff, 0, e.lineage);
    }
    if (std::filesystem::exists(cfg.corpus / "weights.json")) {
      weights = MutatorWeights::Load(cfg.corpus / "weights.json");
    }
  }

  double best = pool.record();
  for (uint64_t t = 1; t <= cfg.iterations; ++t) {
    if (cfg.wall_budget.count() > 0 && std::chrono::steady_clock::now() - start > cfg.wall_budget) {
      break;
    }
    SeedEntry parent = pool.Prioritize();
    ContractMutation m = Mutate(parent.contract, weights, cfg.strategy, rng);
    const ContractAst& mutant = m.outcome.mutated;
    CompiledContract compiled = CompileContract(mutant);
    const Lineage& lin = lineages[parent.lineage];
    Lineage fresh;
    const Lineage* used = &lin;
    if (cfg.regenerate_inputs) {
      fresh = Lineage{lin.target, GenParams(*FindFunction(mutant, lin.target), cfg.pools,
                                            cfg.fixed_inputs, input_rng)};
      used = &fresh;
    }
    auto records = RunAll(roster, compiled.code.code, used->input.calldata, cfg.limits);
    DiffReport diff = Aggregate(records);

    ++report.iterations_run;
    ++report.mutants_generated;
    bool gas_div = false;
    bool op_div = false;
    for (const auto& p : diff.per_pair) {
      gas_div |= p.gas_diff > 0;
      op_div |= p.op_diff > 0;
    }
    if (diff.aggregate_diff > 0) {
      ++report.divergent_mutants;
      if (!report.first_divergence_iteration) report.first_divergence_iteration = t;
    }
    if (gas_div) {
      ++report.gas_divergent_mutants;
      if (!report.first_gas_divergence_iteration) report.first_gas_divergence_iteration = t;
    }
    if (op_div && !diff.out_vul) ++report.trace_only_mutants;
    if (diff.out_vul) ++report.out_vul_mutants;
    if (diff.classification == Classification::kCrashAsymmetry) ++report.crash_asymmetries;
    std::vector<bool> crashed;
    for (const auto& r : records) crashed.push_back(IsCrash(r));
    crash_vectors.push_back(std::move(crashed));

    weights.Update(m.outcome.applied, diff.aggregate_diff - parent.admission_diff,
                   diff.aggregate_diff, cfg.alpha);
    if (IsFinding(diff)) {
      if (!report.first_finding_iteration) report.first_finding_iteration = t;
      store.Add(make_record(t, mutant, *used, used->input.calldata, std::move(records), diff));
    }
    if (pool.Admit(mutant, diff.aggregate_diff, t, parent.lineage)) ++report.admissions;
    best = std::max(best, diff.aggregate_diff);
    report.best_so_far.push_back(best);
    if (hooks.on_iteration) {
      hooks.on_iteration(IterationEvent{t, diff.aggregate_diff, diff.classification,
                                        &m.outcome.applied});
    }
  }

  report.findings = store.size();
  report.record = pool.record();
  report.final_weights = weights;
  auto table = Refine(crash_vectors, roster.size());
  for (size_t i = 0; i < roster.size(); ++i) {
    report.ind_table.push_back(IndRow{roster[i]->id(), table[i].ind1, table[i].ind2});
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!cfg.corpus.empty()) {
    pool.Save(cfg.corpus);
    weights.Save(cfg.corpus / "weights.json");
    WriteText(cfg.corpus / "report.json", ReportToJson(report));
    WriteText(cfg.corpus / "report.txt", RenderReport(report));
  }
  return report;
}

double Median(std::vector<uint64_t> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  size_t n = values.size();
  return n % 2 ? static_cast<double>(values[n / 2])
               : (static_cast<double>(values[n / 2 - 1]) + static_cast<double>(values[n / 2])) / 2;
}

std::vector<StrategySeries> CompareStrategies(const CampaignConfig& cfg,
                                              const std::vector<StrategyChoice>& strategies,
                                              int trials, const CampaignHooks& hooks) {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  CheckConfig(cfg);
  std::vector<StrategySeries> out;
  for (StrategyChoice s : strategies) {
    StrategySeries series{s, std::vector<double>(cfg.iterations, 0.0), {}, 0};
    for (int k = 0; k < trials; ++k) {
      CampaignConfig c = cfg;
      c.corpus.clear();
      c.resume = false;
      c.strategy = s;
      c.rng_seed = DeriveSeed(cfg.rng_seed, 1000 + static_cast<uint64_t>(k));
      CampaignReport r = RunCampaign(c, hooks);
      for (size_t i = 0; i < series.mean_best.size(); ++i) {
        double v = r.best_so_far.empty()
                       ? 0.0
                       : r.best_so_far[std::min(i, r.best_so_far.size() - 1)];
        series.mean_best[i] += v / trials;
      }
      series.first_gas_divergence.push_back(
          r.first_gas_divergence_iteration.value_or(cfg.iterations + 1));
    }
    series.median_first_gas_divergence = Median(series.first_gas_divergence);
    out.push_back(std::move(series));
  }
  return out;
}

std::string ReportToJson(const CampaignReport& r) {
  auto opt = [](const std::optional<uint64_t>& v) { return v ? ojson(*v) : ojson(nullptr); };
  ojson ind = ojson::array();
  for (const auto& row : r.ind_table) {
    ind.push_back({{"backend", row.backend_id}, {"ind1", row.ind1}, {"ind2", row.ind2}});
  }
  ojson j = {{"rng_seed", r.rng_seed},
             {"strategy", StrategyName(r.strategy)},
             {"roster", r.roster},
             {"iterations_run", r.iterations_run},
             {"mutants_generated", r.mutants_generated},
             {"divergent_mutants", r.divergent_mutants},
             {"gas_divergent_mutants", r.gas_divergent_mutants},
             {"trace_only_mutants", r.trace_only_mutants},
             {"out_vul_mutants", r.out_vul_mutants},
             {"crash_asymmetries", r.crash_asymmetries},
             {"findings", r.findings},
             {"admissions", r.admissions},
             {"first_divergence_iteration", opt(r.first_divergence_iteration)},
             {"first_gas_divergence_iteration", opt(r.first_gas_divergence_iteration)},
             {"first_finding_iteration", opt(r.first_finding_iteration)},
             {"record", r.record},
             {"best_so_far", r.best_so_far},
             {"ind_table", ind},
             {"final_weights", ojson::parse(r.final_weights.ToJson())},
             {"wall_time_s", r.wall_time_s}};
  return j.dump(2) + "\n";
}

CampaignReport ReportFromJson(std::string_view text) {
  auto j = ojson::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ConfigError("report is not a JSON object");
  CampaignReport r;
  auto opt = [&](const char* key) -> std::optional<uint64_t> {
    if (j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<uint64_t>();
  };
  try {
    r.rng_seed = j.at("rng_seed").get<uint64_t>();
    auto s = StrategyFromName(j.at("strategy").get<std::string>());
    if (!s) throw ConfigError("report names an unknown strategy");
    r.strategy = *s;
    r.roster = j.at("roster").get<std::vector<std::string>>();
    r.iterations_run = j.at("iterations_run").get<uint64_t>();
    r.mutants_generated = j.at("mutants_generated").get<uint64_t>();
    r.divergent_mutants = j.at("divergent_mutants").get<uint64_t>();
    r.gas_divergent_mutants = j.at("gas_divergent_mutants").get<uint64_t>();
    r.trace_only_mutants = j.at("trace_only_mutants").get<uint64_t>();
    r.out_vul_mutants = j.at("out_vul_mutants").get<uint64_t>();
    r.crash_asymmetries = j.at("crash_asymmetries").get<uint64_t>();
    r.findings = j.at("findings").get<uint64_t>();
    r.admissions = j.at("admissions").get<uint64_t>();
    r.first_divergence_iteration = opt("first_divergence_iteration");
    r.first_gas_divergence_iteration = opt("first_gas_divergence_iteration");
    r.first_finding_iteration = opt("first_finding_iteration");
    r.record = j.at("record").get<double>();
    r.best_so_far = j.at("best_so_far").get<std::vector<double>>();
    for (const auto& row : j.at("ind_table")) {
      r.ind_table.push_back(IndRow{row.at("backend").get<std::string>(),
                                   row.at("ind1").get<size_t>(), row.at("ind2").get<size_t>()});
    }
    r.final_weights = MutatorWeights::FromJson(j.at("final_weights").dump());
    r.wall_time_s = j.at("wall_time_s").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string RenderReport(const CampaignReport& r) {
  std::ostringstream out;
  std::string roster;
  for (size_t i = 0; i < r.roster.size(); ++i) roster += (i ? ", " : "") + r.roster[i];
  auto row = [&](const std::string& k, const std::string& v) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "  %-32s %s\n", k.c_str(), v.c_str());
    out << buf;
  };
  out << "campaign\n";
  row("rng seed", std::to_string(r.rng_seed));
  row("strategy", std::string(StrategyName(r.strategy)));
  row("backends", roster);
  row("iterations", std::to_string(r.iterations_run));
  row("mutants generated", std::to_string(r.mutants_generated));
  row("mutants with diff > 0", std::to_string(r.divergent_mutants));
  row("mutants with gas divergence", std::to_string(r.gas_divergent_mutants));
  row("trace-only divergences", std::to_string(r.trace_only_mutants));
  row("output inconsistencies", std::to_string(r.out_vul_mutants));
  row("crash asymmetries", std::to_string(r.crash_asymmetries));
  row("distinct findings", std::to_string(r.findings));
  row("pool admissions", std::to_string(r.admissions));
  row("first divergence at", OptionalIter(r.first_divergence_iteration));
  row("first gas divergence at", OptionalIter(r.first_gas_divergence_iteration));
  row("first finding at", OptionalIter(r.first_finding_iteration));
  row("record diff", Fixed(r.record, 4));
  row("wall time (s)", Fixed(r.wall_time_s, 2));

  out << "\nrefinement\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-20s %8s %8s\n", "backend", "Ind.1", "Ind.2");
  out << buf;
  for (const auto& ind : r.ind_table) {
    std::snprintf(buf, sizeof buf, "  %-20s %8zu %8zu\n", ind.backend_id.c_str(), ind.ind1,
                  ind.ind2);
    out << buf;
  }

  out << "\nmutator weights\n";
  for (MutatorId id : r.final_weights.Ordered()) {
    std::snprintf(buf, sizeof buf, "  %d  %-22s %.4f\n", id,
                  std::string(MutatorName(id)).c_str(), r.final_weights[id]);
    out << buf;
  }

  out << "\nbest-so-far diff\n";
  size_t n = r.best_so_far.size();
  size_t step = std::max<size_t>(1, n / 10);
  for (size_t i = 0; i < n; i += step) {
    std::snprintf(buf, sizeof buf, "  %8zu  %.4f\n", i + 1, r.best_so_far[i]);
    out << buf;
  }
  if (n && (n - 1) % step != 0) {
    std::snprintf(buf, sizeof buf, "  %8zu  %.4f\n", n, r.best_so_far[n - 1]);
    out << buf;
  }
  return out.str();
}

std::string RenderComparison(const std::vector<StrategySeries>& series) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-12s %10s  %s\n", "strategy", "median", "first gas divergence per trial");
  out << buf;
  for (const auto& s : series) {
    std::string trials;
    for (uint64_t v : s.first_gas_divergence) trials += std::to_string(v) + " ";
    std::snprintf(buf, sizeof buf, "%-12s %10.1f  ", std::string(StrategyName(s.strategy)).c_str(),
                  s.median_first_gas_divergence);
    out << buf << trials << "\n";
  }
  out << "\niteration";
  for (const auto& s : series) out << "\t" << StrategyName(s.strategy);
  out << "\n";
  size_t n = series.empty() ? 0 : series.front().mean_best.size();
  for (size_t i = 0; i < n; ++i) {
    out << i + 1;
    for (const auto& s : series) out << "\t" << Fixed(s.mean_best[i], 4);
    out << "\n";
  }
  return out.str();
}

}  // namespace evmdiff
