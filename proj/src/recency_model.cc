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

#include "xsinc/recency_model.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

namespace xsinc {

RecencyAssay::RecencyAssay(double gamma_shape, double gamma_rate,
                           double recency_cutoff, double frr)
    : gamma_shape_(gamma_shape),
      gamma_rate_(gamma_rate),
      recency_cutoff_(recency_cutoff),
      frr_(frr) {
  if (!(gamma_shape > 0.0) || !(gamma_rate > 0.0)) {
    throw std::invalid_argument("RecencyAssay: gamma shape and rate must be "
                                "positive");
  }
  if (!(recency_cutoff > 0.0)) {
    throw std::invalid_argument("RecencyAssay: recency cutoff must be "
                                "positive");
  }
  if (!(frr >= 0.0 && frr < 1.0)) {
    throw std::invalid_argument("RecencyAssay: frr must lie in [0, 1)");
  }
}

RecencyAssay RecencyAssay::Default() {
  return RecencyAssay(0.352, 1.273, 2.0, 0.0);
}

RecencyAssay RecencyAssay::LongMdri() {
  return RecencyAssay(0.681, 1.003, 2.0, 0.0);
}

RecencyAssay RecencyAssay::WithFrr(double frr) const {
  return RecencyAssay(gamma_shape_, gamma_rate_, recency_cutoff_, frr);
}

double TestRecentProbability(double u, const RecencyAssay& assay) {
  if (!(u >= 0.0)) {
    throw std::invalid_argument("TestRecentProbability: negative duration");
  }
  if (u > assay.recency_cutoff()) return assay.frr();
  if (u == 0.0) return 1.0;
  return boost::math::gamma_q(assay.gamma_shape(), assay.gamma_rate() * u);
}

double Mdri(const RecencyAssay& assay, const QuadratureRule& rule) {
  return Integrate(
      [&assay](double u) { return TestRecentProbability(u, assay); }, 0.0,
      assay.recency_cutoff(), rule);
}

void ValidateDefaultAssayCalibration() {
  const double days = YearsToDays(Mdri(RecencyAssay::Default()));
  if (!(days >= 97.0 && days <= 99.0)) {
    throw std::logic_error("default assay MDRI " + std::to_string(days) +
                           " days is outside [97, 99]");
  }
}

}  // namespace xsinc
