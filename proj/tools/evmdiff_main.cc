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

// evmdiff: differential fuzzing of contract VMs.
//
// Exit status: 0 when the run was clean, 2 when findings exist, 1 on error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evmdiff/campaign.h"
#include "evmdiff/config.h"
#include "evmdiff/errors.h"
#include "evmdiff/findings.h"
#include "evmdiff/vm.h"
#include "json.hpp"

namespace {

constexpr int kClean = 0;
constexpr int kError = 1;
constexpr int kFindings = 2;

struct Overrides {
  std::string config;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> iterations;
  std::optional<std::string> corpus;
  std::optional<std::string> strategy;
  bool quiet = false;
};

void AddOverrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config, "campaign config (JSON)")->required();
  cmd->add_option("--seed", o.seed, "rng seed");
  cmd->add_option("--iterations", o.iterations, "iteration budget");
  cmd->add_option("--corpus", o.corpus, "corpus output directory");
  cmd->add_option("--strategy", o.strategy,
                  "OddComb, EvenComb, ExtremeComb, RandomComb or AllComb");
  cmd->add_flag("-q,--quiet", o.quiet, "no progress output");
}

evmdiff::CampaignConfig Resolve(const Overrides& o) {
  evmdiff::CampaignConfig cfg = evmdiff::LoadConfig(o.config);
  if (o.seed) cfg.rng_seed = *o.seed;
  if (o.iterations) cfg.iterations = *o.iterations;
  if (o.corpus) cfg.corpus = *o.corpus;
  if (o.strategy) {
    auto s = evmdiff::StrategyFromName(*o.strategy);
    if (!s) throw evmdiff::ConfigError("unknown strategy '" + *o.strategy + "'");
    cfg.strategy = *s;
  }
  return cfg;
}

evmdiff::CampaignHooks Hooks(bool quiet) {
  evmdiff::CampaignHooks hooks;
  hooks.on_warning = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
  if (!quiet) {
    hooks.on_iteration = [](const evmdiff::IterationEvent& e) {
      if (e.iteration % 100 == 0 || e.classification != evmdiff::Classification::kAllAgree) {
        std::cerr << "iter " << e.iteration << " diff " << e.diff << " "
                  << evmdiff::ClassificationName(e.classification) << "\n";
      }
    };
  }
  return hooks;
}

int Fuzz(const Overrides& o) {
  evmdiff::CampaignConfig cfg = Resolve(o);
  evmdiff::CampaignReport report = evmdiff::RunCampaign(cfg, Hooks(o.quiet));
  std::cout << evmdiff::RenderReport(report);
  if (!cfg.corpus.empty()) std::cout << "\ncorpus written to " << cfg.corpus.string() << "\n";
  return report.findings > 0 ? kFindings : kClean;
}

int ReplayFinding(const std::string& path) {
  evmdiff::InconsistencyRecord rec = evmdiff::LoadFinding(path);
  evmdiff::ReplayResult result = evmdiff::Replay(rec);
  std::cout << "stored:   " << evmdiff::ClassificationName(rec.diff.classification) << "\n";
  std::cout << "replayed: " << evmdiff::ClassificationName(result.diff.classification)
            << "  aggregate diff " << result.diff.aggregate_diff << "\n\n";
  for (const auto& r : result.records) {
    std::cout << "  " << r.backend_id << ": " << evmdiff::ExecStatusName(r.status);
    if (!r.error.empty()) std::cout << " (" << r.error << ")";
    std::cout << "  gas " << r.gas_used << "  ops " << r.op_seq.size() << "  output 0x"
              << evmdiff::ToHex(r.output) << "\n";
  }
  return evmdiff::IsFinding(result.diff) ? kFindings : kClean;
}

int Compare(const Overrides& o, const std::vector<std::string>& names, int trials) {
  evmdiff::CampaignConfig cfg = Resolve(o);
  std::vector<evmdiff::StrategyChoice> strategies;
  for (const auto& n : names) {
    auto s = evmdiff::StrategyFromName(n);
    if (!s) throw evmdiff::ConfigError("unknown strategy '" + n + "'");
    strategies.push_back(*s);
  }
  auto series = evmdiff::CompareStrategies(cfg, strategies, trials, Hooks(true));
  std::string table = evmdiff::RenderComparison(series);
  std::cout << table;
  if (o.corpus) {
    std::filesystem::create_directories(*o.corpus);
    std::ofstream(std::filesystem::path(*o.corpus) / "comparison.tsv") << table;
  }
  return kClean;
}

int Report(const std::string& corpus) {
  std::filesystem::path dir(corpus);
  std::ifstream in(dir / "report.json");
  if (!in) throw evmdiff::ConfigError("no report.json in " + dir.string());
  std::stringstream ss;
  ss << in.rdbuf();
  evmdiff::CampaignReport report = evmdiff::ReportFromJson(ss.str());
  std::cout << evmdiff::RenderReport(report);

  std::ifstream idx(dir / "findings" / "index.json");
  size_t findings = 0;
  if (idx) {
    auto j = nlohmann::json::parse(idx, nullptr, false);
    if (!j.is_discarded() && j.contains("findings")) {
      std::cout << "\nfindings\n";
      for (const auto& f : j["findings"]) {
        ++findings;
        std::cout << "  " << f.value("file", "") << "  " << f.value("classification", "")
                  << "  diff " << f.value("aggregate_diff", 0.0) << "\n";
      }
    }
  }
  return findings > 0 ? kFindings : kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evmdiff: differential fuzzing of contract VMs"};
  app.require_subcommand(1);

  Overrides fuzz_opts;
  auto* fuzz = app.add_subcommand("fuzz", "run a fuzzing campaign");
  AddOverrides(fuzz, fuzz_opts);

  std::string finding;
  auto* replay = app.add_subcommand("replay", "re-run a stored finding");
  replay->add_option("finding", finding, "finding JSON file")->required();

  Overrides cmp_opts;
  std::vector<std::string> strategies = {"AllComb", "RandomComb"};
  int trials = 10;
  auto* compare = app.add_subcommand("compare-strategies", "compare mutation strategies");
  AddOverrides(compare, cmp_opts);
  compare->add_option("--strategies", strategies, "strategies to compare")->delimiter(',');
  compare->add_option("--trials", trials, "trials per strategy");

  std::string corpus;
  auto* report = app.add_subcommand("report", "re-render the report stored in a corpus");
  report->add_option("corpus", corpus, "corpus directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kClean : kError;
  }

  try {
    if (*fuzz) return Fuzz(fuzz_opts);
    if (*replay) return ReplayFinding(finding);
    if (*compare) return Compare(cmp_opts, strategies, trials);
    if (*report) return Report(corpus);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
