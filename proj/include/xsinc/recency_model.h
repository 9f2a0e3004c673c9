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

#ifndef XSINC_RECENCY_MODEL_H_
#define XSINC_RECENCY_MODEL_H_

#include "xsinc/quadrature.h"

namespace xsinc {

inline constexpr double kDaysPerYear = 365.25;

// Duration-specific test-recent probability
//   phi(u) = {1 - F_Gamma(u; shape, rate)} 1{u <= cutoff} + frr 1{u > cutoff}
// with the gamma law parameterised by rate (mean = shape / rate). Times are
// in years.
class RecencyAssay {
 public:
  RecencyAssay(double gamma_shape, double gamma_rate, double recency_cutoff,
               double frr = 0.0);

  // MDRI of roughly 98 days with a two-year cutoff.
  static RecencyAssay Default();
  // MDRI of roughly 224 days with a two-year cutoff.
  static RecencyAssay LongMdri();

  RecencyAssay WithFrr(double frr) const;

  double gamma_shape() const { return gamma_shape_; }
  double gamma_rate() const { return gamma_rate_; }
  double recency_cutoff() const { return recency_cutoff_; }
  double frr() const { return frr_; }

  bool operator==(const RecencyAssay&) const = default;

 private:
  double gamma_shape_;
  double gamma_rate_;
  double recency_cutoff_;
  double frr_;
};

// Throws std::invalid_argument for u < 0.
double TestRecentProbability(double u, const RecencyAssay& assay);

// Integral of phi over [0, cutoff]; the frr branch never enters.
double Mdri(const RecencyAssay& assay,
            const QuadratureRule& rule = AdaptiveSimpson{});

inline double YearsToDays(double years) { return years * kDaysPerYear; }
inline double DaysToYears(double days) { return days / kDaysPerYear; }

// Checks that the default assay integrates to an MDRI in [97, 99] days,
// which pins the rate (not scale) reading of the gamma parameter. Throws
// std::logic_error otherwise.
void ValidateDefaultAssayCalibration();

}  // namespace xsinc

#endif  // XSINC_RECENCY_MODEL_H_
