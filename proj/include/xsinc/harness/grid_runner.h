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

#ifndef XSINC_HARNESS_GRID_RUNNER_H_
#define XSINC_HARNESS_GRID_RUNNER_H_

#include <optional>
#include <string>
#include <vector>

#include "xsinc/estimator.h"
#include "xsinc/harness/scenario.h"
#include "xsinc/harness/summary.h"
#include "xsinc/population.h"

namespace xsinc::harness {

struct ReplicationRecord {
  int replication = 0;
  SurveyCounts counts;
  double mdri_hat = 0.0;
  IncidenceEstimate estimate;
};

enum class ScenarioStatus { kOk, kInfeasible, kError };
std::string ToString(ScenarioStatus status);

struct AnalyticSummary {
  std::optional<double> effective_mdri;
  std::optional<double> bias;          // frr == 0 only
  std::optional<double> log_variance;  // from expected p*, p_r
  std::optional<double> p_star;
  std::optional<double> p_r;
  std::optional<double> expected_screened;
  bool stochastic = false;  // some term came from Monte Carlo
  std::string error;        // set when an analytic term could not be formed
};

struct ScenarioResult {
  Scenario scenario;
  ScenarioStatus status = ScenarioStatus::kOk;
  std::string error;
  std::vector<ReplicationRecord> replications;  // empty unless kOk
  ScenarioSummary summary;
  AnalyticSummary analytic;
};

struct RunOptions {
  int workers = 1;
  bool analytics = true;
  EligibilityProfile::Options profile;
};

// One replication: draws the survey and plugs in `mdri` (perturbed when the
// scenario asks for noise) and the true FRR. Throws InfeasibleScenarioError.
ReplicationRecord RunReplication(const Scenario& scenario, int replication,
                                 double mdri);
ReplicationRecord RunReplication(const Scenario& scenario, int replication);

AnalyticSummary ComputeAnalytics(const Scenario& scenario,
                                 const EligibilityProfile::Options& profile);

// Scenario x replication units go to a pool of `workers` threads; results
// land in canonical order so output does not depend on scheduling.
// Infeasible scenarios are reported in their result and the rest continue.
std::vector<ScenarioResult> RunScenarios(const std::vector<Scenario>& scenarios,
                                         const RunOptions& options = {});

// Runs every scenario produced by ExpandGrid(spec).
std::vector<ScenarioResult> RunGrid(const GridSpec& spec,
                                    const RunOptions& options = {});

bool AllOk(const std::vector<ScenarioResult>& results);

}  // namespace xsinc::harness

#endif  // XSINC_HARNESS_GRID_RUNNER_H_
