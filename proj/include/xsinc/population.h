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

#ifndef XSINC_POPULATION_H_
#define XSINC_POPULATION_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "xsinc/random_stream.h"
#include "xsinc/recency_model.h"
#include "xsinc/testing_history.h"

namespace xsinc {

// Constant incidence and prevalence. The infection duration of a positive is
// then flat with density incidence (1 - p) / p on [0, max_duration], where
// max_duration = p / (incidence (1 - p)).
class PopulationParams {
 public:
  // `horizon` defaults to max_duration and must not exceed it.
  PopulationParams(double incidence, double prevalence,
                   std::optional<double> horizon = std::nullopt);

  // incidence 0.032 per person-year, prevalence 0.29.
  static PopulationParams Default();

  double incidence() const { return incidence_; }
  double prevalence() const { return prevalence_; }
  double max_duration() const { return max_duration_; }
  double horizon() const { return horizon_; }
  double duration_density() const {
    return incidence_ * (1.0 - prevalence_) / prevalence_;
  }

 private:
  double incidence_;
  double prevalence_;
  double max_duration_;
  double horizon_;
};

// Attendance probabilities q0 (last test negative, or never aware) and q1
// (aware positives), plus the exclusion window c: anyone tested within the
// last c years is ineligible.
class ScreeningPolicy {
 public:
  ScreeningPolicy(double q0, double q1, double exclusion_window);

  // q0 = 1, q1 = r.
  static ScreeningPolicy FromRatio(double r, double exclusion_window);

  double q0() const { return q0_; }
  double q1() const { return q1_; }
  double ratio() const { return q1_ / q0_; }
  double exclusion_window() const { return exclusion_window_; }

 private:
  double q0_;
  double q1_;
  double exclusion_window_;
};

struct Individual {
  bool infected = false;
  std::optional<double> duration;  // present iff infected
  double time_since_test = 0.0;
  bool aware = false;  // infected and last observed test was positive
  bool attended = false;
  bool eligible = false;
  std::optional<bool> recent;  // present iff infected and surveyed

  bool surveyed() const { return attended && eligible; }
};

struct SurveyCounts {
  std::int64_t n_total = 0;
  std::int64_t n_pos = 0;
  std::int64_t n_neg = 0;
  std::int64_t n_rec = 0;
  std::int64_t n_screened = 0;  // attendees checked against the criterion

  bool operator==(const SurveyCounts&) const = default;
};

class InfeasibleScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Purpose tags for the per-individual substreams; each operation draws from
// its own child so adding draws in one never shifts another.
enum class StreamPurpose : std::uint64_t {
  kStatus = 1,
  kDuration = 2,
  kResidual = 3,
  kSwpWalk = 4,
  kAttendance = 5,
  kRecency = 6,
};

inline RandomStream PurposeStream(const RandomStream& individual,
                                  StreamPurpose purpose) {
  return individual.Split(static_cast<std::uint64_t>(purpose));
}

// `rng` is the individual's own stream.
Individual SampleIndividual(const PopulationParams& params,
                            const TestingProcess& process,
                            const RandomStream& rng);

// Same draws as SampleIndividual with the status forced to infected.
Individual SampleInfectedIndividual(const PopulationParams& params,
                                    const TestingProcess& process,
                                    const RandomStream& rng);

Individual ApplyScreening(Individual individual, const ScreeningPolicy& policy,
                          const RandomStream& rng);

// Throws std::logic_error for an uninfected individual.
Individual RunRecencyTest(Individual individual, const RecencyAssay& assay,
                          const RandomStream& rng);

struct SurveyOptions {
  std::int64_t attempt_cap = 100'000'000;
};

// Draws individual i from replication.Split(i) until n_target eligible
// attendees are admitted. Throws InfeasibleScenarioError once attempt_cap
// individuals have been sampled. When `admitted` is non-null the surveyed
// individuals are appended to it.
SurveyCounts AssembleSurvey(const PopulationParams& params,
                            const TestingProcess& process,
                            const ScreeningPolicy& policy,
                            const RecencyAssay& assay, std::int64_t n_target,
                            const RandomStream& replication,
                            const SurveyOptions& options = {},
                            std::vector<Individual>* admitted = nullptr);

}  // namespace xsinc

#endif  // XSINC_POPULATION_H_
