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

#include "xsinc/screening_analytics.h"

#include <cmath>
#include <string>

namespace xsinc {

double InclusionProbability(ObservationRule rule, double lambda, double p,
                            double theta, double r, double c, double t_star) {
  if (!(lambda > 0.0) || !(p > 0.0 && p < 1.0) || !(theta > 0.0) ||
      !(r >= 0.0 && r <= 1.0) || !(c >= 0.0) || !(t_star > 0.0)) {
    throw std::invalid_argument("InclusionProbability: parameter out of "
                                "range");
  }
  const double odds = p / (1.0 - p);
  const double e_c = std::exp(-theta * c);
  const double e_t = std::exp(-theta * t_star);
  const double den =
      lambda * (r - 1.0) / theta * (e_t - 1.0) + 1.0 + r * odds;
  double num = 0.0;
  if (rule == ObservationRule::kRegular) {
    num = lambda * (r - 1.0) * (e_t / theta - e_c / theta - c * e_c) +
          e_c * (r * odds + 1.0);
  } else {
    num = lambda * (r * (std::exp(theta * c - theta * t_star) / theta - c -
                         1.0 / theta) +
                    (c * e_c - e_t / theta + e_c / theta)) +
          e_c + r * odds;
  }
  const double s = num / den;
  // Rounding slack only; anything further out is reported.
  constexpr double kSlack = 1e-12;
  if (!(s > 0.0) || s > 1.0 + kSlack) {
    throw InconsistencyError("InclusionProbability: s = " + std::to_string(s) +
                             " outside (0, 1]");
  }
  return std::min(s, 1.0);
}

std::int64_t RequiredScreening(std::int64_t n_target, double s) {
  if (n_target <= 0) {
    throw std::invalid_argument("RequiredScreening: n_target must be "
                                "positive");
  }
  if (s == 0.0) {
    throw InfeasibleScenarioError("RequiredScreening: inclusion probability "
                                  "is zero");
  }
  if (!(s > 0.0 && s <= 1.0)) {
    throw std::invalid_argument("RequiredScreening: s outside (0, 1]");
  }
  const double ratio = static_cast<double>(n_target) / s;
  return static_cast<std::int64_t>(std::ceil(ratio - 1e-9 * ratio));
}

ScreeningForecast ForecastScreening(ObservationRule rule,
                                    const PopulationParams& params,
                                    double theta, double r, double c,
                                    std::int64_t n_target) {
  const double s = InclusionProbability(rule, params.incidence(),
                                        params.prevalence(), theta, r, c,
                                        params.horizon());
  return {s, RequiredScreening(n_target, s)};
}

double InclusionProbabilityMonteCarlo(const PopulationParams& params,
                                      const TestingProcess& process,
                                      const ScreeningPolicy& policy,
                                      std::int64_t attendees,
                                      const RandomStream& rng) {
  if (attendees <= 0) {
    throw std::invalid_argument("InclusionProbabilityMonteCarlo: attendees "
                                "must be positive");
  }
  std::int64_t seen = 0;
  std::int64_t included = 0;
  for (std::uint64_t i = 0; seen < attendees; ++i) {
    const RandomStream s = rng.Split(i);
    const Individual ind =
        ApplyScreening(SampleIndividual(params, process, s), policy, s);
    if (!ind.attended) continue;
    ++seen;
    if (ind.eligible) ++included;
  }
  return static_cast<double>(included) / static_cast<double>(seen);
}

}  // namespace xsinc
