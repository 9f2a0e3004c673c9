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

#include "xsinc/harness/summary.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace xsinc::harness {

double Quantile(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("Quantile: empty input");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double Mean(std::span<const double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double SampleVariance(std::span<const double> values) {
  if (values.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double m = Mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return ss / static_cast<double>(values.size() - 1);
}

ScenarioSummary Summarize(std::span<const IncidenceEstimate> estimates,
                          std::span<const std::int64_t> screened) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  ScenarioSummary s;
  std::vector<double> values;
  std::vector<double> logs;
  for (const auto& e : estimates) {
    if (!e.defined()) {
      ++s.n_undefined;
      continue;
    }
    ++s.n_defined;
    if (e.negative()) ++s.n_negative;
    values.push_back(e.value);
    if (e.value > 0.0) logs.push_back(std::log(e.value));
  }
  s.mean = Mean(values);
  std::sort(values.begin(), values.end());
  s.median = values.empty() ? kNaN : Quantile(values, 0.5);
  s.p025 = values.empty() ? kNaN : Quantile(values, 0.025);
  s.p975 = values.empty() ? kNaN : Quantile(values, 0.975);
  s.n_log = static_cast<std::int64_t>(logs.size());
  s.var_log = SampleVariance(logs);
  double total = 0.0;
  for (auto n : screened) total += static_cast<double>(n);
  s.mean_screened =
      screened.empty() ? kNaN : total / static_cast<double>(screened.size());
  return s;
}

}  // namespace xsinc::harness
