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

#ifndef XSINC_HARNESS_HISTOGRAM_H_
#define XSINC_HARNESS_HISTOGRAM_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "xsinc/population.h"
#include "xsinc/testing_history.h"

namespace xsinc::harness {

struct HistogramSpec {
  TestingProcess process =
      TestingProcess::Exponential(1.0, ObservationRule::kStopWhenPositive);
  ScreeningPolicy policy = ScreeningPolicy::FromRatio(1.0, 0.0);
  PopulationParams params = PopulationParams::Default();
  std::int64_t n_infected = 50'000;
  double bin_width = 0.25;
  std::uint64_t seed = 20240917;
};

// Infected individuals by duration bin. Attendees are split by awareness and
// by whether the test-based criterion admits them.
struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t unaware_included = 0;
  std::int64_t aware_included = 0;
  std::int64_t unaware_excluded = 0;
  std::int64_t aware_excluded = 0;
  std::int64_t not_attended = 0;

  std::int64_t included() const { return unaware_included + aware_included; }
  std::int64_t excluded() const { return unaware_excluded + aware_excluded; }
  std::int64_t total() const { return included() + excluded() + not_attended; }
};

// Bins cover [0, max_duration]; the last one may be narrower.
std::vector<HistogramBin> EmitHistogram(const HistogramSpec& spec);

void WriteHistogramCsv(const std::vector<HistogramBin>& bins,
                       std::ostream& out);

}  // namespace xsinc::harness

#endif  // XSINC_HARNESS_HISTOGRAM_H_
