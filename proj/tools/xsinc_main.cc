// Copyright 2026 The xsinc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// xsinc: scenario grids, diagnostic histograms and analytic tables for
// cross-sectional incidence estimation under testing-based exclusion.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "xsinc/estimator.h"
#include "xsinc/harness/grid_runner.h"
#include "xsinc/harness/histogram.h"
#include "xsinc/harness/output.h"
#include "xsinc/harness/presets.h"
#include "xsinc/harness/table1.h"
#include "xsinc/recency_model.h"

namespace fs = std::filesystem;
using namespace xsinc;
using namespace xsinc::harness;

namespace {

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  std::string out_dir;
  int workers = 1;
};

fs::path OutDir(const CommonFlags& flags) {
  if (!flags.out_dir.empty()) return flags.out_dir;
  if (const char* env = std::getenv("XSINC_OUT_DIR"); env && *env) return env;
  return "xsinc_out";
}

void AddCommon(CLI::App* app, CommonFlags& flags) {
  app->add_option("--seed", flags.seed, "Base seed (overrides config)");
  app->add_option("--reps", flags.reps, "Replications per scenario")
      ->check(CLI::PositiveNumber);
  app->add_option("--out-dir", flags.out_dir,
                  "Output directory (default $XSINC_OUT_DIR or ./xsinc_out)");
  app->add_option("--workers", flags.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
}

void ApplySets(GridSpec& spec, const std::vector<std::string>& sets) {
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--set expects key=value, got '" + kv + "'");
    }
    SetGridValue(spec, kv.substr(0, eq), kv.substr(eq + 1));
  }
}

int RunAndWrite(GridSpec spec, const CommonFlags& flags,
                const std::string& command) {
  if (flags.seed) spec.seed = *flags.seed;
  if (flags.reps) spec.replications = *flags.reps;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Scenario> scenarios = ExpandGrid(spec);
  std::cerr << command << ": " << scenarios.size() << " scenarios x "
            << spec.replications << " replications, " << flags.workers
            << " worker(s)\n";
  RunOptions options;
  options.workers = flags.workers;
  const auto results = RunScenarios(scenarios, options);
  RunInfo info;
  info.command = command;
  info.config = FormatGridSpec(spec);
  info.seed = spec.seed;
  info.workers = flags.workers;
  info.wall_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  const fs::path dir = OutDir(flags);
  WriteRunOutputs(dir, results, info);
  std::cerr << "wrote " << (dir / "summary.csv").string() << " ("
            << info.wall_seconds << " s)\n";
  int failures = 0;
  for (const auto& r : results) {
    if (r.status != ScenarioStatus::kOk) {
      ++failures;
      std::cerr << "  " << r.scenario.label << ": " << ToString(r.status)
                << ": " << r.error << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

ObservationRule RuleFlag(const std::string& text) {
  try {
    return ParseObservationRule(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--rule", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-sectional incidence estimation under testing-based "
               "exclusion"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* grid = app.add_subcommand("grid", "Run a scenario grid");
  std::string config_path;
  std::string preset = "main";
  std::vector<std::string> sets;
  AddCommon(grid, flags);
  grid->add_option("--config", config_path, "Grid configuration file");
  grid->add_option("--preset", preset,
                   "Base grid: main, frr, uniform_intertest, long_mdri");
  grid->add_option("--set", sets, "Override a config key (key=value)");

  auto* sens = app.add_subcommand("sensitivity", "Run a sensitivity suite");
  std::string suite;
  AddCommon(sens, flags);
  sens->add_option("suite", suite, "frr, uniform_intertest or long_mdri")
      ->required();
  sens->add_option("--set", sets, "Override a config key (key=value)");

  auto* hist = app.add_subcommand("histogram",
                                  "Infected population by duration bin");
  std::string hist_rule = "swp";
  double hist_theta = 1.0, hist_r = 1.0, hist_c = 0.0, bin_width = 0.25;
  std::int64_t n_infected = 50'000;
  AddCommon(hist, flags);
  hist->add_option("--rule", hist_rule, "regular or swp");
  hist->add_option("--theta", hist_theta, "Tests per year")
      ->check(CLI::PositiveNumber);
  hist->add_option("--r", hist_r, "Selective attendance ratio")
      ->check(CLI::Range(0.0, 1.0));
  hist->add_option("--c", hist_c, "Exclusion window, years")
      ->check(CLI::NonNegativeNumber);
  hist->add_option("--n", n_infected, "Infected individuals")
      ->check(CLI::PositiveNumber);
  hist->add_option("--bin-width", bin_width, "Bin width, years")
      ->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table1",
                                   "Analytic bias and screening table");
  AddCommon(table, flags);

  auto* mdri = app.add_subcommand("mdri", "One-shot effective MDRI query");
  std::string mdri_rule = "swp", assay_name = "default";
  double q_theta = 1.0, q_r = 1.0, q_c = 0.0;
  mdri->add_option("--rule", mdri_rule, "regular or swp");
  mdri->add_option("--assay", assay_name, "default or long")
      ->check(CLI::IsMember({"default", "long"}));
  mdri->add_option("--theta", q_theta, "Tests per year")
      ->check(CLI::PositiveNumber);
  mdri->add_option("--r", q_r, "Selective attendance ratio")
      ->check(CLI::Range(0.0, 1.0));
  mdri->add_option("--c", q_c, "Exclusion window, years")
      ->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    ValidateDefaultAssayCalibration();

    if (*grid) {
      GridSpec spec = PresetGrid(preset);
      if (!config_path.empty()) spec = LoadGridSpec(config_path, spec);
      ApplySets(spec, sets);
      return RunAndWrite(spec, flags, "grid");
    }
    if (*sens) {
      const SensitivitySuite s = ParseSensitivitySuite(suite);
      GridSpec spec = SensitivityGrid(s);
      ApplySets(spec, sets);
      return RunAndWrite(spec, flags, "sensitivity " + ToString(s));
    }
    if (*hist) {
      HistogramSpec spec;
      const ObservationRule rule = RuleFlag(hist_rule);
      spec.process = TestingProcess::Exponential(hist_theta, rule);
      spec.policy = ScreeningPolicy::FromRatio(hist_r, hist_c);
      spec.n_infected = n_infected;
      spec.bin_width = bin_width;
      if (flags.seed) spec.seed = *flags.seed;
      const auto bins = EmitHistogram(spec);
      const fs::path dir = OutDir(flags);
      fs::create_directories(dir);
      const fs::path path =
          dir / ("histogram_" + ToString(rule) + "_theta" +
                 FormatNumber(hist_theta) + "_r" + FormatNumber(hist_r) +
                 "_c" + FormatNumber(hist_c) + ".csv");
      std::ofstream out(path, std::ios::binary);
      WriteHistogramCsv(bins, out);
      std::cerr << "wrote " << path.string() << "\n";
      return 0;
    }
    if (*table) {
      const auto rows = EmitTable1();
      WriteTable1Csv(rows, std::cout);
      if (!flags.out_dir.empty() || std::getenv("XSINC_OUT_DIR")) {
        const fs::path dir = OutDir(flags);
        fs::create_directories(dir);
        std::ofstream out(dir / "table1.csv", std::ios::binary);
        WriteTable1Csv(rows, out);
      }
      return 0;
    }
    if (*mdri) {
      const RecencyAssay assay = assay_name == "long"
                                     ? RecencyAssay::LongMdri()
                                     : RecencyAssay::Default();
      const ObservationRule rule = RuleFlag(mdri_rule);
      const PopulationParams params = PopulationParams::Default();
      const double base = Mdri(assay);
      const double closed =
          EffectiveMdriClosed(assay, q_theta, q_r, q_c, rule);
      const double numeric = EffectiveMdriNumeric(
          {assay, TestingProcess::Exponential(q_theta, rule), q_r, q_c,
           params});
      std::cout.precision(10);
      std::cout << "mdri_days " << YearsToDays(base) << "\n"
                << "effective_mdri_days " << YearsToDays(closed) << "\n"
                << "effective_mdri_numeric_days " << YearsToDays(numeric)
                << "\n"
                << "analytic_bias " << AnalyticBias(closed, base,
                                                    params.incidence())
                << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "xsinc: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
