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

#include "xsinc/harness/histogram.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "xsinc/harness/output.h"

namespace xsinc::harness {

std::vector<HistogramBin> EmitHistogram(const HistogramSpec& spec) {
  if (spec.n_infected <= 0 || !(spec.bin_width > 0.0)) {
    throw std::invalid_argument("EmitHistogram: need n_infected > 0 and a "
                                "positive bin width");
  }
  const double tau = spec.params.max_duration();
  const auto n_bins =
      static_cast<std::size_t>(std::ceil(tau / spec.bin_width - 1e-12));
  std::vector<HistogramBin> bins(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) {
    bins[k].lo = static_cast<double>(k) * spec.bin_width;
    bins[k].hi = std::min(tau, bins[k].lo + spec.bin_width);
  }
  const RandomStream base(spec.seed);
  for (std::int64_t i = 0; i < spec.n_infected; ++i) {
    const RandomStream rng = base.Split(static_cast<std::uint64_t>(i));
    const Individual ind = ApplyScreening(
        SampleInfectedIndividual(spec.params, spec.process, rng), spec.policy,
        rng);
    const auto k = std::min(
        n_bins - 1, static_cast<std::size_t>(*ind.duration / spec.bin_width));
    HistogramBin& bin = bins[k];
    if (!ind.attended) {
      ++bin.not_attended;
    } else if (ind.eligible) {
      ++(ind.aware ? bin.aware_included : bin.unaware_included);
    } else {
      ++(ind.aware ? bin.aware_excluded : bin.unaware_excluded);
    }
  }
  return bins;
}

void WriteHistogramCsv(const std::vector<HistogramBin>& bins,
                       std::ostream& out) {
  out << "bin_lo,bin_hi,unaware_included,aware_included,unaware_excluded,"
         "aware_excluded,not_attended\n";
  for (const auto& b : bins) {
    out << FormatField(b.lo) << ',' << FormatField(b.hi) << ','
        << b.unaware_included << ',' << b.aware_included << ','
        << b.unaware_excluded << ',' << b.aware_excluded << ','
        << b.not_attended << '\n';
  }
}

}  // namespace xsinc::harness
