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

#ifndef XSINC_TESTING_HISTORY_H_
#define XSINC_TESTING_HISTORY_H_

#include <optional>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "xsinc/quadrature.h"
#include "xsinc/random_stream.h"

namespace xsinc {

// Tests arrive as a Poisson process with `theta` tests per year.
struct ExponentialLaw {
  double theta;
  bool operator==(const ExponentialLaw&) const = default;
};

// Inter-test gaps are Uniform[a, b] years.
struct UniformLaw {
  double a;
  double b;
  bool operator==(const UniformLaw&) const = default;
};

using InterTestLaw = std::variant<ExponentialLaw, UniformLaw>;

enum class ObservationRule {
  kRegular,           // every scheduled test before the survey is observed
  kStopWhenPositive,  // no further tests after the first positive one
};

std::string ToString(ObservationRule rule);
// Accepts "regular"/"id" and "swp"/"stop_when_positive".
ObservationRule ParseObservationRule(const std::string& text);

class TestingProcess {
 public:
  TestingProcess(InterTestLaw law, ObservationRule rule);

  static TestingProcess Exponential(double theta, ObservationRule rule);
  static TestingProcess Uniform(double a, double b, ObservationRule rule);

  const InterTestLaw& law() const { return law_; }
  ObservationRule rule() const { return rule_; }
  double MeanInterTestTime() const;
  bool is_exponential() const {
    return std::holds_alternative<ExponentialLaw>(law_);
  }
  // Throws std::logic_error for a non-exponential law.
  double theta() const;

  TestingProcess WithRule(ObservationRule rule) const {
    return TestingProcess(law_, rule);
  }

  bool operator==(const TestingProcess&) const = default;

 private:
  InterTestLaw law_;
  ObservationRule rule_;
};

double SampleInterTestGap(const InterTestLaw& law, RandomStream& rng);

// Stationary time since the last renewal, CDF (1/mu) int_0^x (1 - F(y)) dy.
double ResidualCdf(const InterTestLaw& law, double x);
// Inverse of ResidualCdf at e in [0, 1].
double ResidualQuantile(const InterTestLaw& law, double e);
double SampleResidual(const TestingProcess& process, RandomStream& rng);

// Time since the most recent observed test. `residual_id` is the time since
// the last scheduled test; `duration` is the infection duration, absent for
// an HIV-negative individual. Under stop-when-positive with
// residual_id < duration, earlier tests are stepped through (gaps drawn from
// the inter-test law) and the earliest test after infection is returned, so
// residual_id <= result <= duration.
double ObserveMostRecent(double residual_id, std::optional<double> duration,
                         const TestingProcess& process, RandomStream& rng);

// Density of the time since the last test under stop-when-positive Poisson
// testing, given infection duration u:
//   theta e^{-theta (u - t)} for t <= u, theta e^{-theta t} for t > u.
double SwpConditionalDensity(double t, double u, double theta);

// Eligibility split for an infected individual with duration u under an
// exclusion window c:
//   unaware = Pr(T > u, T > c | U = u)   (last test predates infection)
//   aware   = Pr(c < T <= u | U = u)     (last test was positive)
struct EligibilityGivenDuration {
  double unaware;
  double aware;
};

// Exponential law: both probabilities come from quadrature of the
// conditional densities (Exponential(theta) for the regular rule,
// SwpConditionalDensity for stop-when-positive). Uniform law under the
// regular rule uses ResidualCdf. Uniform law under stop-when-positive has no
// closed form and throws std::logic_error; use EstimateEligibilityMonteCarlo.
EligibilityGivenDuration EligibilityFromDensity(
    const TestingProcess& process, double u, double c,
    const AdaptiveSimpson& quadrature = {1e-12, 1 << 16});

EligibilityGivenDuration EstimateEligibilityMonteCarlo(
    const TestingProcess& process, double u, double c, long long draws,
    RandomStream rng);

// Closed forms of EligibilityFromDensity for exponential testing.
EligibilityGivenDuration ExponentialEligibility(double theta,
                                                ObservationRule rule, double u,
                                                double c);

// Pr(T > c | D = 0): the residual survival at c.
double NegativeEligibility(const InterTestLaw& law, double c);


// Eligibility split as a function of infection duration on [0, u_max] for a
// fixed window c. Exact wherever EligibilityFromDensity applies; for
// stop-when-positive uniform testing the aware share is estimated by Monte
// Carlo on a node grid (which always contains c) and linearly interpolated,
// while the unaware share stays exact.
class EligibilityProfile {
 public:
  struct Options {
    AdaptiveSimpson density_quadrature{1e-12, 1 << 16};
    long long mc_draws_per_node = 100000;
    double node_spacing = 0.05;
    std::uint64_t seed = 0x6e1c0ffeeULL;
    // Use the Poisson closed forms instead of density quadrature. Faster,
    // but not independent of the closed-form effective MDRI.
    bool exponential_closed_form = false;
  };

  EligibilityProfile(const TestingProcess& process, double c, double u_max,
                     const Options& options);
  EligibilityProfile(const TestingProcess& process, double c, double u_max)
      : EligibilityProfile(process, c, u_max, Options{}) {}

  EligibilityGivenDuration operator()(double u) const;

  bool stochastic() const { return !nodes_.empty(); }
  double window() const { return c_; }
  double u_max() const { return u_max_; }

 private:
  TestingProcess process_;
  double c_;
  double u_max_;
  AdaptiveSimpson quadrature_;
  bool closed_form_;
  std::vector<double> nodes_;
  std::vector<double> aware_at_node_;
};

}  // namespace xsinc

#endif  // XSINC_TESTING_HISTORY_H_
