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

#include "xsinc/population.h"

#include <cmath>
#include <string>

namespace xsinc {

PopulationParams::PopulationParams(double incidence, double prevalence,
                                   std::optional<double> horizon)
    : incidence_(incidence), prevalence_(prevalence) {
  if (!(incidence > 0.0)) {
    throw std::invalid_argument("PopulationParams: incidence must be "
                                "positive");
  }
  if (!(prevalence > 0.0 && prevalence < 1.0)) {
    throw std::invalid_argument("PopulationParams: prevalence must lie in "
                                "(0, 1)");
  }
  max_duration_ = prevalence / (incidence * (1.0 - prevalence));
  horizon_ = horizon.value_or(max_duration_);
  if (!(horizon_ > 0.0) || horizon_ > max_duration_) {
    throw std::invalid_argument("PopulationParams: horizon must lie in "
                                "(0, max_duration]");
  }
}

PopulationParams PopulationParams::Default() {
  return PopulationParams(0.032, 0.29);
}

ScreeningPolicy::ScreeningPolicy(double q0, double q1, double exclusion_window)
    : q0_(q0), q1_(q1), exclusion_window_(exclusion_window) {
  if (!(q0 > 0.0 && q0 <= 1.0) || !(q1 >= 0.0 && q1 <= q0)) {
    throw std::invalid_argument("ScreeningPolicy: need 0 <= q1 <= q0 <= 1 "
                                "and q0 > 0");
  }
  if (!(exclusion_window >= 0.0) || !std::isfinite(exclusion_window)) {
    throw std::invalid_argument("ScreeningPolicy: exclusion window must be "
                                "non-negative");
  }
}

ScreeningPolicy ScreeningPolicy::FromRatio(double r, double exclusion_window) {
  return ScreeningPolicy(1.0, r, exclusion_window);
}

namespace {

Individual SampleWithStatus(bool infected, const PopulationParams& params,
                            const TestingProcess& process,
                            const RandomStream& rng) {
  Individual ind;
  ind.infected = infected;
  if (infected) {
    RandomStream s = PurposeStream(rng, StreamPurpose::kDuration);
    ind.duration = params.max_duration() * s.Uniform();
  }
  RandomStream residual_stream = PurposeStream(rng, StreamPurpose::kResidual);
  const double residual = SampleResidual(process, residual_stream);
  RandomStream walk = PurposeStream(rng, StreamPurpose::kSwpWalk);
  ind.time_since_test = ObserveMostRecent(residual, ind.duration, process, walk);
  ind.aware = infected && *ind.duration >= ind.time_since_test;
  return ind;
}

}  // namespace

Individual SampleIndividual(const PopulationParams& params,
                            const TestingProcess& process,
                            const RandomStream& rng) {
  RandomStream s = PurposeStream(rng, StreamPurpose::kStatus);
  return SampleWithStatus(s.Bernoulli(params.prevalence()), params, process,
                          rng);
}

Individual SampleInfectedIndividual(const PopulationParams& params,
                                    const TestingProcess& process,
                                    const RandomStream& rng) {
  return SampleWithStatus(true, params, process, rng);
}

Individual ApplyScreening(Individual individual, const ScreeningPolicy& policy,
                          const RandomStream& rng) {
  RandomStream s = PurposeStream(rng, StreamPurpose::kAttendance);
  individual.attended =
      s.Bernoulli(individual.aware ? policy.q1() : policy.q0());
  individual.eligible =
      individual.time_since_test > policy.exclusion_window();
  return individual;
}

Individual RunRecencyTest(Individual individual, const RecencyAssay& assay,
                          const RandomStream& rng) {
  if (!individual.infected || !individual.duration.has_value()) {
    throw std::logic_error("RunRecencyTest: individual is not infected");
  }
  RandomStream s = PurposeStream(rng, StreamPurpose::kRecency);
  individual.recent =
      s.Bernoulli(TestRecentProbability(*individual.duration, assay));
  return individual;
}

SurveyCounts AssembleSurvey(const PopulationParams& params,
                            const TestingProcess& process,
                            const ScreeningPolicy& policy,
                            const RecencyAssay& assay, std::int64_t n_target,
                            const RandomStream& replication,
                            const SurveyOptions& options,
                            std::vector<Individual>* admitted) {
  if (n_target <= 0) {
    throw std::invalid_argument("AssembleSurvey: n_target must be positive");
  }
  SurveyCounts counts;
  std::int64_t sampled = 0;
  while (counts.n_total < n_target) {
    if (sampled >= options.attempt_cap) {
      throw InfeasibleScenarioError(
          "survey infeasible: " + std::to_string(sampled) +
          " individuals sampled, " + std::to_string(counts.n_total) + " of " +
          std::to_string(n_target) + " admitted");
    }
    const RandomStream rng = replication.Split(static_cast<std::uint64_t>(sampled));
    ++sampled;
    Individual ind =
        ApplyScreening(SampleIndividual(params, process, rng), policy, rng);
    if (!ind.attended) continue;
    ++counts.n_screened;
    if (!ind.eligible) continue;
    ++counts.n_total;
    if (ind.infected) {
      ind = RunRecencyTest(std::move(ind), assay, rng);
      ++counts.n_pos;
      if (*ind.recent) ++counts.n_rec;
    } else {
      ++counts.n_neg;
    }
    if (admitted != nullptr) admitted->push_back(ind);
  }
  return counts;
}

}  // namespace xsinc
