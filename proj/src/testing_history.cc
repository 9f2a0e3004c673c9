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

#include "xsinc/testing_history.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xsinc {

std::string ToString(ObservationRule rule) {
  return rule == ObservationRule::kRegular ? "regular" : "swp";
}

ObservationRule ParseObservationRule(const std::string& text) {
  if (text == "regular" || text == "id") return ObservationRule::kRegular;
  if (text == "swp" || text == "stop_when_positive") {
    return ObservationRule::kStopWhenPositive;
  }
  throw std::invalid_argument("unknown observation rule '" + text + "'");
}

TestingProcess::TestingProcess(InterTestLaw law, ObservationRule rule)
    : law_(law), rule_(rule) {
  if (const auto* e = std::get_if<ExponentialLaw>(&law_)) {
    if (!(e->theta > 0.0) || !std::isfinite(e->theta)) {
      throw std::invalid_argument("TestingProcess: theta must be positive");
    }
  } else {
    const auto& u = std::get<UniformLaw>(law_);
    if (!(u.a >= 0.0) || !(u.b > u.a) || !std::isfinite(u.b)) {
      throw std::invalid_argument("TestingProcess: need 0 <= a < b");
    }
  }
}

TestingProcess TestingProcess::Exponential(double theta,
                                           ObservationRule rule) {
  return TestingProcess(ExponentialLaw{theta}, rule);
}

TestingProcess TestingProcess::Uniform(double a, double b,
                                       ObservationRule rule) {
  return TestingProcess(UniformLaw{a, b}, rule);
}

double TestingProcess::MeanInterTestTime() const {
  if (const auto* e = std::get_if<ExponentialLaw>(&law_)) return 1.0 / e->theta;
  const auto& u = std::get<UniformLaw>(law_);
  return 0.5 * (u.a + u.b);
}

double TestingProcess::theta() const {
  if (const auto* e = std::get_if<ExponentialLaw>(&law_)) return e->theta;
  throw std::logic_error("TestingProcess: theta requested for a uniform law");
}

double SampleInterTestGap(const InterTestLaw& law, RandomStream& rng) {
  if (const auto* e = std::get_if<ExponentialLaw>(&law)) {
    return rng.Exponential(e->theta);
  }
  const auto& u = std::get<UniformLaw>(law);
  return u.a + (u.b - u.a) * rng.Uniform();
}

double ResidualCdf(const InterTestLaw& law, double x) {
  if (x <= 0.0) return 0.0;
  if (const auto* e = std::get_if<ExponentialLaw>(&law)) {
    return -std::expm1(-e->theta * x);
  }
  const auto& u = std::get<UniformLaw>(law);
  if (x < u.a) return 2.0 * x / (u.a + u.b);
  if (x <= u.b) {
    return (-x * x + 2.0 * u.b * x - u.a * u.a) / (u.b * u.b - u.a * u.a);
  }
  return 1.0;
}

double ResidualQuantile(const InterTestLaw& law, double e) {
  if (!(e >= 0.0 && e <= 1.0)) {
    throw std::invalid_argument("ResidualQuantile: e outside [0, 1]");
  }
  if (const auto* ex = std::get_if<ExponentialLaw>(&law)) {
    return -std::log1p(-e) / ex->theta;
  }
  const auto& u = std::get<UniformLaw>(law);
  if (e < 2.0 * u.a / (u.a + u.b)) return 0.5 * (u.a + u.b) * e;
  return u.b - std::sqrt((u.b * u.b - u.a * u.a) * (1.0 - e));
}

double SampleResidual(const TestingProcess& process, RandomStream& rng) {
  if (const auto* e = std::get_if<ExponentialLaw>(&process.law())) {
    return rng.Exponential(e->theta);
  }
  return ResidualQuantile(process.law(), rng.Uniform());
}

double ObserveMostRecent(double residual_id, std::optional<double> duration,
                         const TestingProcess& process, RandomStream& rng) {
  if (process.rule() == ObservationRule::kRegular || !duration.has_value()) {
    return residual_id;
  }
  const double u = *duration;
  if (residual_id >= u) return residual_id;
  // Walk back through the earlier scheduled tests; the last one that is
  // still after infection is the first positive test.
  double t = residual_id;
  for (;;) {
    const double earlier = t + SampleInterTestGap(process.law(), rng);
    if (earlier > u) break;
    t = earlier;
  }
  return t;
}

double SwpConditionalDensity(double t, double u, double theta) {
  if (!(t >= 0.0) || !(u >= 0.0) || !(theta > 0.0)) {
    throw std::invalid_argument("SwpConditionalDensity: need t, u >= 0 and "
                                "theta > 0");
  }
  if (t <= u) return theta * std::exp(-theta * (u - t));
  return theta * std::exp(-theta * t);
}

EligibilityGivenDuration EligibilityFromDensity(
    const TestingProcess& process, double u, double c,
    const AdaptiveSimpson& quadrature) {
  const double upper = std::max(u, c);
  if (const auto* law = std::get_if<UniformLaw>(&process.law())) {
    if (process.rule() == ObservationRule::kStopWhenPositive) {
      throw std::logic_error("EligibilityFromDensity: no closed density for "
                             "stop-when-positive uniform testing");
    }
    const double aware =
        u > c ? ResidualCdf(*law, u) - ResidualCdf(*law, c) : 0.0;
    return {1.0 - ResidualCdf(*law, upper), aware};
  }
  const double theta = process.theta();
  Integrand density;
  if (process.rule() == ObservationRule::kRegular) {
    density = [theta](double t) { return theta * std::exp(-theta * t); };
  } else {
    density = [theta, u](double t) {
      return SwpConditionalDensity(t, u, theta);
    };
  }
  // The stop-when-positive density has a kink at t = u.
  double below = 0.0;
  if (upper > u) {
    below = IntegrateAdaptiveSimpson(density, 0.0, u, quadrature) +
            IntegrateAdaptiveSimpson(density, u, upper, quadrature);
  } else {
    below = IntegrateAdaptiveSimpson(density, 0.0, upper, quadrature);
  }
  const double aware =
      u > c ? IntegrateAdaptiveSimpson(density, c, u, quadrature) : 0.0;
  return {1.0 - below, aware};
}

EligibilityGivenDuration EstimateEligibilityMonteCarlo(
    const TestingProcess& process, double u, double c, long long draws,
    RandomStream rng) {
  if (draws <= 0) {
    throw std::invalid_argument("EstimateEligibilityMonteCarlo: draws <= 0");
  }
  const double upper = std::max(u, c);
  long long unaware = 0;
  long long aware = 0;
  for (long long i = 0; i < draws; ++i) {
    const double residual = SampleResidual(process, rng);
    const double t = ObserveMostRecent(residual, u, process, rng);
    if (t > upper) {
      ++unaware;
    } else if (t > c && t <= u) {
      ++aware;
    }
  }
  const double n = static_cast<double>(draws);
  return {unaware / n, aware / n};
}

EligibilityGivenDuration ExponentialEligibility(double theta,
                                                ObservationRule rule, double u,
                                                double c) {
  const double unaware = std::exp(-theta * std::max(u, c));
  if (u <= c) return {unaware, 0.0};
  if (rule == ObservationRule::kRegular) {
    return {unaware, std::exp(-theta * c) - std::exp(-theta * u)};
  }
  return {unaware, -std::expm1(-theta * (u - c))};
}

double NegativeEligibility(const InterTestLaw& law, double c) {
  return 1.0 - ResidualCdf(law, c);
}


EligibilityProfile::EligibilityProfile(const TestingProcess& process, double c,
                                       double u_max, const Options& options)
    : process_(process),
      c_(c),
      u_max_(u_max),
      quadrature_(options.density_quadrature),
      closed_form_(options.exponential_closed_form &&
                   process.is_exponential()) {
  if (!(c >= 0.0) || !(u_max > 0.0)) {
    throw std::invalid_argument("EligibilityProfile: need c >= 0, u_max > 0");
  }
  const bool needs_mc = !process.is_exponential() &&
                        process.rule() == ObservationRule::kStopWhenPositive;
  if (!needs_mc) return;
  if (!(options.node_spacing > 0.0)) {
    throw std::invalid_argument("EligibilityProfile: node spacing must be "
                                "positive");
  }
  const int n = static_cast<int>(std::ceil(u_max / options.node_spacing));
  for (int i = 0; i <= n; ++i) {
    nodes_.push_back(std::min(u_max, i * options.node_spacing));
  }
  if (c < u_max) nodes_.push_back(c);
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  const RandomStream root(options.seed);
  aware_at_node_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double u = nodes_[i];
    if (u <= c) {
      aware_at_node_.push_back(0.0);
      continue;
    }
    aware_at_node_.push_back(EstimateEligibilityMonteCarlo(
                                 process, u, c, options.mc_draws_per_node,
                                 root.Split(i))
                                 .aware);
  }
}

EligibilityGivenDuration EligibilityProfile::operator()(double u) const {
  if (closed_form_) {
    return ExponentialEligibility(process_.theta(), process_.rule(), u, c_);
  }
  if (!stochastic()) return EligibilityFromDensity(process_, u, c_, quadrature_);
  const double unaware =
      NegativeEligibility(process_.law(), std::max(u, c_));
  if (u <= c_) return {unaware, 0.0};
  const auto hi = std::upper_bound(nodes_.begin(), nodes_.end(), u);
  if (hi == nodes_.end()) return {unaware, aware_at_node_.back()};
  const std::size_t j = static_cast<std::size_t>(hi - nodes_.begin());
  const double w = (u - nodes_[j - 1]) / (nodes_[j] - nodes_[j - 1]);
  return {unaware, (1.0 - w) * aware_at_node_[j - 1] + w * aware_at_node_[j]};
}

}  // namespace xsinc
