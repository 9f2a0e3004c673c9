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

#ifndef XSINC_HARNESS_PRESETS_H_
#define XSINC_HARNESS_PRESETS_H_

#include <string>

#include "xsinc/harness/scenario.h"

namespace xsinc::harness {

inline constexpr int kDeskScaleReplications = 1000;

// 2 rules x theta {0.4, 1, 1.5, 2} x r {0, 0.3, 0.6, 1}
// x c {0, 0.25, 1, 1.5, 2}: 160 scenarios.
GridSpec MainGrid();

enum class SensitivitySuite { kFrr, kUniformIntertest, kLongMdri };

// Accepts "frr", "uniform_intertest" and "long_mdri".
SensitivitySuite ParseSensitivitySuite(const std::string& name);
std::string ToString(SensitivitySuite suite);

// frr:               frr {0, 0.5%, 1%, 2%} x r x theta {0.4, 1} x c {0, 2}
//                    x 2 rules = 128
// uniform_intertest: Uniform[0, b], b {3, 4} x r x c (main) x 2 rules = 80
// long_mdri:         main grid with the long-MDRI assay = 160
GridSpec SensitivityGrid(SensitivitySuite suite);

GridSpec PresetGrid(const std::string& name);

}  // namespace xsinc::harness

#endif  // XSINC_HARNESS_PRESETS_H_
