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

#include "xsinc/harness/grid_runner.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>

#include "xsinc/screening_analytics.h"

namespace xsinc::harness {

namespace {

constexpr std::uint64_t kNoiseSalt = 0x4d44524e6f697365ULL;
constexpr std::int64_t kInclusionAttendees = 1'000'000;

}  // namespace

std::string ToString(ScenarioStatus status) {
  switch (status) {
    case ScenarioStatus::kOk:
      return "ok";
    case ScenarioStatus::kInfeasible:
      return "infeasible";
    case ScenarioStatus::kError:
      return "error";
  }
  return "error";
}

ReplicationRecord RunReplication(const Scenario& scenario, int replication,
                                 double mdri) {
  const RandomStream stream =
      RandomStream(scenario.seed).Split(static_cast<std::uint64_t>(replication));
  ReplicationRecord record;
  record.replication = replication;
  record.counts = AssembleSurvey(scenario.params, scenario.process,
                                 scenario.policy, scenario.assay,
                                 scenario.n_target, stream,
                                 SurveyOptions{scenario.attempt_cap});
  record.mdri_hat = mdri;
  if (scenario.mdri_noise_sd > 0.0) {
    RandomStream noise = RandomStream(scenario.seed ^ kNoiseSalt)
                             .Split(static_cast<std::uint64_t>(replication));
    record.mdri_hat += scenario.mdri_noise_sd * noise.StandardNormal();
  }
  record.estimate = KassanjeeEstimate({record.counts, record.mdri_hat,
                                       scenario.assay.frr(),
                                       scenario.assay.recency_cutoff()});
  return record;
}

ReplicationRecord RunReplication(const Scenario& scenario, int replication) {
  return RunReplication(scenario, replication, Mdri(scenario.assay));
}

namespace {

AnalyticSummary Analytics(const Scenario& scenario,
                          const EligibilityProfile& profile,
                          const NumericMdriOptions& numeric) {
  AnalyticSummary out;
  const RecencyAssay& assay = scenario.assay;
  const TestingProcess& process = scenario.process;
  const double c = scenario.policy.exclusion_window();
  out.stochastic = profile.stochastic();

  if (assay.frr() == 0.0 && scenario.policy.q0() == 1.0) {
    const double eff =
        process.is_exponential()
            ? EffectiveMdriClosed(assay, process.theta(),
                                  scenario.policy.ratio(), c, process.rule())
            : EffectiveMdriNumeric({assay, process, scenario.policy.ratio(),
                                    c, scenario.params},
                                   numeric);
    out.effective_mdri = eff;
    out.bias = AnalyticBias(eff, Mdri(assay), scenario.params.incidence());
  }

  const SurveyComposition comp = ExpectedSurveyComposition(
      assay, profile, process, scenario.policy, scenario.params, numeric);
  out.p_star = comp.p_star;
  out.p_r = comp.p_r;
  if (comp.p_r > 0.0 && comp.p_star > 0.0 && comp.p_star < 1.0) {
    out.log_variance = LogVariance(scenario.n_target, comp.p_star, comp.p_r);
  }

  if (process.is_exponential() && scenario.policy.q0() == 1.0) {
    try {
      out.expected_screened =
          static_cast<double>(ForecastScreening(process.rule(),
                                                scenario.params,
                                                process.theta(),
                                                scenario.policy.ratio(), c,
                                                scenario.n_target)
                                  .required_screened);
    } catch (const InconsistencyError&) {
      // Left empty; the Monte Carlo screened count is still reported.
    } catch (const InfeasibleScenarioError&) {
    }
  } else {
    const double s = InclusionProbabilityMonteCarlo(
        scenario.params, process, scenario.policy, kInclusionAttendees,
        RandomStream(scenario.seed).Split(0x696e636cULL));
    if (s > 0.0) {
      out.expected_screened =
          static_cast<double>(RequiredScreening(scenario.n_target, s));
    }
    out.stochastic = true;
  }
  return out;
}

NumericMdriOptions NumericOptions(const EligibilityProfile::Options& profile) {
  NumericMdriOptions numeric;
  numeric.profile = profile;
  return numeric;
}

}  // namespace

AnalyticSummary ComputeAnalytics(const Scenario& scenario,
                                 const EligibilityProfile::Options& profile) {
  const EligibilityProfile p(scenario.process,
                             scenario.policy.exclusion_window(),
                             scenario.params.max_duration(), profile);
  return Analytics(scenario, p, NumericOptions(profile));
}

std::vector<ScenarioResult> RunScenarios(const std::vector<Scenario>& scenarios,
                                         const RunOptions& options) {
  const std::size_t n = scenarios.size();
  std::vector<ScenarioResult> results(n);
  std::vector<double> mdri(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (scenarios[i].replications < 1) {
      throw std::invalid_argument("RunScenarios: replications must be >= 1");
    }
    results[i].scenario = scenarios[i];
    results[i].replications.resize(
        static_cast<std::size_t>(scenarios[i].replications));
    mdri[i] = Mdri(scenarios[i].assay);
  }

  // Profiles depend only on (process, c, horizon); Monte Carlo ones are
  // costly, so they are shared across scenarios.
  if (options.analytics) {
    using Key = std::tuple<double, double, double, int, double>;
    std::map<Key, std::unique_ptr<EligibilityProfile>> cache;
    const NumericMdriOptions numeric = NumericOptions(options.profile);
    for (std::size_t i = 0; i < n; ++i) {
      const Scenario& s = scenarios[i];
      try {
        EligibilityProfile::Options profile_options = options.profile;
        profile_options.exponential_closed_form = true;
        double k0 = 0.0;
        double k1 = 0.0;
        if (const auto* u = std::get_if<UniformLaw>(&s.process.law())) {
          k0 = u->a;
          k1 = u->b;
        } else {
          k0 = -1.0;
          k1 = s.process.theta();
        }
        const Key key{k0, k1, s.policy.exclusion_window(),
                      static_cast<int>(s.process.rule()),
                      s.params.max_duration()};
        auto& slot = cache[key];
        if (!slot) {
          slot = std::make_unique<EligibilityProfile>(
              s.process, s.policy.exclusion_window(), s.params.max_duration(),
              profile_options);
        }
        results[i].analytic = Analytics(s, *slot, numeric);
      } catch (const std::exception& e) {
        results[i].analytic = {};
        results[i].analytic.error = e.what();
      }
    }
  }

  struct Unit {
    std::size_t scenario;
    int replication;
  };
  std::vector<Unit> units;
  for (std::size_t i = 0; i < n; ++i) {
    for (int r = 0; r < scenarios[i].replications; ++r) units.push_back({i, r});
  }

  std::vector<std::atomic<bool>> failed(n);
  std::vector<std::string> errors(n);
  std::vector<ScenarioStatus> status(n, ScenarioStatus::kOk);
  std::mutex error_mutex;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= units.size()) return;
      const Unit u = units[k];
      if (failed[u.scenario].load()) continue;
      try {
        results[u.scenario].replications[static_cast<std::size_t>(
            u.replication)] =
            RunReplication(scenarios[u.scenario], u.replication,
                           mdri[u.scenario]);
      } catch (const InfeasibleScenarioError& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed[u.scenario] = true;
        status[u.scenario] = ScenarioStatus::kInfeasible;
        errors[u.scenario] = e.what();
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed[u.scenario] = true;
        status[u.scenario] = ScenarioStatus::kError;
        errors[u.scenario] = e.what();
      }
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < n; ++i) {
    ScenarioResult& res = results[i];
    if (failed[i]) {
      res.status = status[i];
      res.error = errors[i];
    }
    if (res.status != ScenarioStatus::kOk) {
      res.replications.clear();
      continue;
    }
    std::vector<IncidenceEstimate> estimates;
    std::vector<std::int64_t> screened;
    for (const auto& rec : res.replications) {
      estimates.push_back(rec.estimate);
      screened.push_back(rec.counts.n_screened);
    }
    res.summary = Summarize(estimates, screened);
  }
  return results;
}

std::vector<ScenarioResult> RunGrid(const GridSpec& spec,
                                    const RunOptions& options) {
  return RunScenarios(ExpandGrid(spec), options);
}

bool AllOk(const std::vector<ScenarioResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) {
    return r.status == ScenarioStatus::kOk;
  });
}

}  // namespace xsinc::harness
