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

#include "xsinc/estimator.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace xsinc {

IncidenceEstimate KassanjeeEstimate(const EstimatorInputs& inputs) {
  const SurveyCounts& n = inputs.counts;
  const double denominator =
      static_cast<double>(n.n_neg) *
      (inputs.mdri_hat - inputs.frr_hat * inputs.recency_cutoff);
  if (n.n_neg <= 0 || !(denominator > 0.0)) return {};
  const double numerator = static_cast<double>(n.n_rec) -
                           static_cast<double>(n.n_pos) * inputs.frr_hat;
  return {EstimateStatus::kDefined, numerator / denominator};
}

double LogVariance(std::int64_t n_total, double p_star, double p_r) {
  if (n_total <= 0 || !(p_star > 0.0 && p_star < 1.0) ||
      !(p_r > 0.0 && p_r <= 1.0)) {
    throw std::domain_error("LogVariance: need N > 0, 0 < p* < 1, "
                            "0 < p_r <= 1");
  }
  return (1.0 / (p_r * p_star) + 1.0 / (1.0 - p_star)) /
         static_cast<double>(n_total);
}

namespace {

void RequireZeroFrr(const RecencyAssay& assay, const char* who) {
  if (assay.frr() != 0.0) {
    throw std::invalid_argument(std::string(who) +
                                ": effective MDRI needs a zero FRR");
  }
}

// Integrates over [lo, hi] with extra breakpoints that fall inside.
double IntegrateWithBreaks(const Integrand& f, double lo, double hi,
                           std::vector<double> breaks,
                           const AdaptiveSimpson& rule) {
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = std::max(lo, breaks[i]);
    const double b = std::min(hi, breaks[i + 1]);
    if (b > a) total += IntegrateAdaptiveSimpson(f, a, b, rule);
  }
  return total;
}

}  // namespace

double EffectiveMdriNumeric(const EffectiveMdriQuery& query,
                            const NumericMdriOptions& options) {
  RequireZeroFrr(query.assay, "EffectiveMdriNumeric");
  const double cutoff = query.assay.recency_cutoff();
  const double c = query.c;
  const EligibilityProfile profile(query.process, c, cutoff, options.profile);
  const Integrand numerator_integrand = [&](double u) {
    const EligibilityGivenDuration e = profile(u);
    return TestRecentProbability(u, query.assay) *
           (query.r * e.aware + e.unaware);
  };
  const AdaptiveSimpson& rule =
      profile.stochastic() ? options.outer_stochastic : options.outer;
  const double numerator =
      IntegrateWithBreaks(numerator_integrand, 0.0, cutoff, {c}, rule);

  double denominator = 0.0;
  if (query.process.is_exponential()) {
    const double theta = query.process.theta();
    denominator =
        1.0 - IntegrateAdaptiveSimpson(
                  [theta](double t) { return theta * std::exp(-theta * t); },
                  0.0, c, options.profile.density_quadrature);
  } else {
    denominator = NegativeEligibility(query.process.law(), c);
  }
  if (!(denominator > 0.0)) {
    throw std::domain_error("EffectiveMdriNumeric: Pr(T > c | D = 0) is 0");
  }
  return numerator / denominator;
}

double EffectiveMdriClosed(const RecencyAssay& assay, double theta, double r,
                           double c, ObservationRule rule,
                           const QuadratureRule& quadrature) {
  RequireZeroFrr(assay, "EffectiveMdriClosed");
  if (!(theta > 0.0) || !(r >= 0.0 && r <= 1.0) || !(c >= 0.0)) {
    throw std::invalid_argument("EffectiveMdriClosed: need theta > 0, "
                                "r in [0, 1], c >= 0");
  }
  const double mdri = Mdri(assay, quadrature);
  const double cutoff = assay.recency_cutoff();
  double k = 0.0;
  if (c < cutoff) {
    k = Integrate(
        [&](double u) {
          return TestRecentProbability(u, assay) *
                 -std::expm1(theta * (c - u));
        },
        c, cutoff, quadrature);
  }
  if (rule == ObservationRule::kRegular) return mdri - (1.0 - r) * k;
  return mdri - (1.0 - r * std::exp(theta * c)) * k;
}

double AnalyticBias(double effective_mdri, double mdri, double incidence) {
  return incidence * (effective_mdri / mdri - 1.0);
}

double AnalyticBias(const RecencyAssay& assay, double theta, double r,
                    double c, ObservationRule rule,
                    const PopulationParams& params,
                    const QuadratureRule& quadrature) {
  return AnalyticBias(
      EffectiveMdriClosed(assay, theta, r, c, rule, quadrature),
      Mdri(assay, quadrature), params.incidence());
}

SurveyComposition ExpectedSurveyComposition(
    const RecencyAssay& assay, const EligibilityProfile& profile,
    const TestingProcess& process, const ScreeningPolicy& policy,
    const PopulationParams& params, const NumericMdriOptions& options) {
  const double tau = params.max_duration();
  const double c = policy.exclusion_window();
  const double q0 = policy.q0();
  const double q1 = policy.q1();
  if (profile.window() != c || profile.u_max() < tau) {
    throw std::invalid_argument("ExpectedSurveyComposition: profile does not "
                                "match the policy/population");
  }
  const AdaptiveSimpson& rule =
      profile.stochastic() ? options.outer_stochastic : options.outer;
  const std::vector<double> breaks = {c, assay.recency_cutoff()};
  // Mass of infected individuals per unit duration, over everyone.
  const double density = params.prevalence() * params.duration_density();

  const double positives =
      density * IntegrateWithBreaks(
                    [&](double u) {
                      const auto e = profile(u);
                      return q0 * e.unaware + q1 * e.aware;
                    },
                    0.0, tau, breaks, rule);
  const double recents =
      density * IntegrateWithBreaks(
                    [&](double u) {
                      const auto e = profile(u);
                      return TestRecentProbability(u, assay) *
                             (q0 * e.unaware + q1 * e.aware);
                    },
                    0.0, tau, breaks, rule);
  const double negatives = (1.0 - params.prevalence()) * q0 *
                           NegativeEligibility(process.law(), c);
  // Awareness needs only T^ID <= u, whatever the observation rule.
  const double aware =
      density * IntegrateWithBreaks(
                    [&](double u) { return ResidualCdf(process.law(), u); },
                    0.0, tau, {}, options.outer);
  const double attendance = q0 + (q1 - q0) * aware;

  SurveyComposition out;
  out.p_star = positives / (positives + negatives);
  out.p_r = positives > 0.0 ? recents / positives : 0.0;
  out.attendance = attendance;
  out.inclusion = (positives + negatives) / attendance;
  return out;
}

SurveyComposition ExpectedSurveyComposition(
    const RecencyAssay& assay, const TestingProcess& process,
    const ScreeningPolicy& policy, const PopulationParams& params,
    const NumericMdriOptions& options) {
  const EligibilityProfile profile(process, policy.exclusion_window(),
                                   params.max_duration(), options.profile);
  return ExpectedSurveyComposition(assay, profile, process, policy, params,
                                   options);
}

}  // namespace xsinc
