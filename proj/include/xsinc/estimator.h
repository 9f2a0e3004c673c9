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

#ifndef XSINC_ESTIMATOR_H_
#define XSINC_ESTIMATOR_H_

#include <cstdint>
#include <limits>

#include "xsinc/population.h"
#include "xsinc/quadrature.h"
#include "xsinc/recency_model.h"
#include "xsinc/testing_history.h"

namespace xsinc {

struct EstimatorInputs {
  SurveyCounts counts;
  double mdri_hat;        // years
  double frr_hat;         // probability
  double recency_cutoff;  // years
};

enum class EstimateStatus { kDefined, kUndefined };

struct IncidenceEstimate {
  EstimateStatus status = EstimateStatus::kUndefined;
  double value = std::numeric_limits<double>::quiet_NaN();

  bool defined() const { return status == EstimateStatus::kDefined; }
  // Possible when frr_hat > 0; kept as-is rather than truncated at zero.
  bool negative() const { return defined() && value < 0.0; }
};

// (n_rec - n_pos frr) / (n_neg (mdri - frr T*)). Undefined when n_neg == 0
// or mdri - frr T* <= 0.
IncidenceEstimate KassanjeeEstimate(const EstimatorInputs& inputs);

// Var(log estimate) ~ (1/N)(1/(p_r p*) + 1/(1 - p*)). Throws
// std::domain_error unless 0 < p_star < 1 and 0 < p_r <= 1.
double LogVariance(std::int64_t n_total, double p_star, double p_r);

struct EffectiveMdriQuery {
  RecencyAssay assay;
  TestingProcess process;
  double r;  // selective attendance ratio
  double c;  // exclusion window, years
  PopulationParams params;
};

struct NumericMdriOptions {
  AdaptiveSimpson outer{1e-10, 1 << 20};
  // Used only when the profile is Monte Carlo based.
  AdaptiveSimpson outer_stochastic{1e-8, 1 << 20};
  EligibilityProfile::Options profile;
};

// Effective MDRI
//   int_0^T* phi(u) {r Pr(c < T <= u | u) + Pr(T > max(u, c) | u)} du
//   / Pr(T > c | D = 0)
// with the conditional probabilities taken from EligibilityProfile (density
// quadrature for exponential testing, Monte Carlo for stop-when-positive
// uniform testing). Requires assay.frr() == 0.
double EffectiveMdriNumeric(const EffectiveMdriQuery& query,
                            const NumericMdriOptions& options = {});

// Same quantity from the Poisson-testing closed forms:
//   regular: MDRI - (1 - r) K(c)
//   swp:     MDRI - (1 - r e^{theta c}) K(c)
//   K(c) = int_c^T* phi(u) (1 - e^{theta (c - u)}) du, zero for c >= T*.
// MDRI and K share `rule`. Requires assay.frr() == 0.
double EffectiveMdriClosed(const RecencyAssay& assay, double theta, double r,
                           double c, ObservationRule rule,
                           const QuadratureRule& quadrature = AdaptiveSimpson{});

// Asymptotic bias incidence (effective / mdri - 1) with the true MDRI
// plugged into the estimator.
double AnalyticBias(double effective_mdri, double mdri, double incidence);

double AnalyticBias(const RecencyAssay& assay, double theta, double r,
                    double c, ObservationRule rule,
                    const PopulationParams& params,
                    const QuadratureRule& quadrature = AdaptiveSimpson{});

// Expected make-up of the survey population.
struct SurveyComposition {
  double p_star;         // Pr(D = 1 | surveyed)
  double p_r;            // Pr(R = 1 | D = 1, surveyed)
  double attendance;     // Pr(Q = 1)
  double inclusion;      // Pr(C = 1 | Q = 1)
};

SurveyComposition ExpectedSurveyComposition(
    const RecencyAssay& assay, const TestingProcess& process,
    const ScreeningPolicy& policy, const PopulationParams& params,
    const NumericMdriOptions& options = {});

// Same, reusing a profile built for policy.exclusion_window() on
// [0, params.max_duration()].
SurveyComposition ExpectedSurveyComposition(
    const RecencyAssay& assay, const EligibilityProfile& profile,
    const TestingProcess& process, const ScreeningPolicy& policy,
    const PopulationParams& params, const NumericMdriOptions& options = {});

}  // namespace xsinc

#endif  // XSINC_ESTIMATOR_H_
