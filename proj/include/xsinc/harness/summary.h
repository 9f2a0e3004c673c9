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

#ifndef XSINC_HARNESS_SUMMARY_H_
#define XSINC_HARNESS_SUMMARY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "xsinc/estimator.h"

namespace xsinc::harness {

// Linear interpolation between order statistics (R type 7). `sorted` must
// be ascending and non-empty.
double Quantile(std::span<const double> sorted, double q);

double Mean(std::span<const double> values);
// n - 1 denominator; NaN for fewer than two values.
double SampleVariance(std::span<const double> values);

struct ScenarioSummary {
  std::int64_t n_defined = 0;
  std::int64_t n_undefined = 0;
  std::int64_t n_negative = 0;
  double median = 0.0;
  double mean = 0.0;
  double p025 = 0.0;
  double p975 = 0.0;
  double var_log = 0.0;  // over strictly positive estimates
  std::int64_t n_log = 0;
  double mean_screened = 0.0;
};

// Percentile and mean fields are NaN when nothing is defined.
ScenarioSummary Summarize(std::span<const IncidenceEstimate> estimates,
                          std::span<const std::int64_t> screened);

}  // namespace xsinc::harness

#endif  // XSINC_HARNESS_SUMMARY_H_
