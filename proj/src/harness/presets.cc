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

#include "xsinc/harness/presets.h"

namespace xsinc::harness {

GridSpec MainGrid() {
  GridSpec spec;
  spec.name = "main";
  spec.replications = kDeskScaleReplications;
  spec.theta = {0.4, 1.0, 1.5, 2.0};
  spec.r = {0.0, 0.3, 0.6, 1.0};
  spec.c = {0.0, 0.25, 1.0, 1.5, 2.0};
  return spec;
}

SensitivitySuite ParseSensitivitySuite(const std::string& name) {
  if (name == "frr") return SensitivitySuite::kFrr;
  if (name == "uniform_intertest" || name == "uniform") {
    return SensitivitySuite::kUniformIntertest;
  }
  if (name == "long_mdri") return SensitivitySuite::kLongMdri;
  throw ConfigError("unknown sensitivity suite '" + name + "'");
}

std::string ToString(SensitivitySuite suite) {
  switch (suite) {
    case SensitivitySuite::kFrr:
      return "frr";
    case SensitivitySuite::kUniformIntertest:
      return "uniform_intertest";
    case SensitivitySuite::kLongMdri:
      return "long_mdri";
  }
  return "unknown";
}

GridSpec SensitivityGrid(SensitivitySuite suite) {
  GridSpec spec = MainGrid();
  spec.name = "sensitivity_" + ToString(suite);
  switch (suite) {
    case SensitivitySuite::kFrr:
      spec.frr = {0.0, 0.005, 0.01, 0.02};
      spec.theta = {0.4, 1.0};
      spec.c = {0.0, 2.0};
      break;
    case SensitivitySuite::kUniformIntertest:
      spec.law = "uniform";
      spec.uniform_a = 0.0;
      spec.uniform_b = {3.0, 4.0};
      break;
    case SensitivitySuite::kLongMdri: {
      const RecencyAssay long_assay = RecencyAssay::LongMdri();
      spec.assay_shape = long_assay.gamma_shape();
      spec.assay_rate = long_assay.gamma_rate();
      spec.assay_cutoff = long_assay.recency_cutoff();
      break;
    }
  }
  return spec;
}

GridSpec PresetGrid(const std::string& name) {
  if (name == "main") return MainGrid();
  return SensitivityGrid(ParseSensitivitySuite(name));
}

}  // namespace xsinc::harness
