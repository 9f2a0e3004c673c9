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

#ifndef XSINC_SCREENING_ANALYTICS_H_
#define XSINC_SCREENING_ANALYTICS_H_

#include <cstdint>
#include <stdexcept>

#include "xsinc/population.h"
#include "xsinc/random_stream.h"
#include "xsinc/testing_history.h"

namespace xsinc {

// A closed form left (0, 1]; points at a parameter-range bug upstream.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pr(C = 1 | Q = 1) under Poisson testing with rate theta, written in the
// attendance ratio r = q1/q0:
//
//   den   = lambda (r - 1) (e^{-theta t*} - 1) / theta + 1 + r p / (1 - p)
//   s^ID  = [lambda (r - 1)(e^{-theta t*}/theta - e^{-theta c}/theta
//            - c e^{-theta c}) + e^{-theta c} (r p/(1-p) + 1)] / den
//   s^SWP = [lambda {r (e^{theta c - theta t*}/theta - c - 1/theta)
//            + (c e^{-theta c} - e^{-theta t*}/theta + e^{-theta c}/theta)}
//            + e^{-theta c} + r p/(1-p)] / den
//
// The r p/(1-p) terms fold lambda (1 - p) t* q1 into prevalence, so the
// forms are exact for t* equal to the maximum infection duration.
double InclusionProbability(ObservationRule rule, double lambda, double p,
                            double theta, double r, double c, double t_star);

// ceil(n_target / s). Throws InfeasibleScenarioError for s == 0.
std::int64_t RequiredScreening(std::int64_t n_target, double s);

struct ScreeningForecast {
  double inclusion_probability;
  std::int64_t required_screened;
};

ScreeningForecast ForecastScreening(ObservationRule rule,
                                    const PopulationParams& params,
                                    double theta, double r, double c,
                                    std::int64_t n_target);

// Estimates Pr(C = 1 | Q = 1) by simulating individuals until `attendees`
// of them attend. Works for any inter-test law.
double InclusionProbabilityMonteCarlo(const PopulationParams& params,
                                      const TestingProcess& process,
                                      const ScreeningPolicy& policy,
                                      std::int64_t attendees,
                                      const RandomStream& rng);

}  // namespace xsinc

#endif  // XSINC_SCREENING_ANALYTICS_H_
