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

#ifndef XSINC_HARNESS_SCENARIO_H_
#define XSINC_HARNESS_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xsinc/population.h"
#include "xsinc/recency_model.h"
#include "xsinc/testing_history.h"

namespace xsinc::harness {

struct Scenario {
  std::string label;
  RecencyAssay assay = RecencyAssay::Default();
  TestingProcess process =
      TestingProcess::Exponential(1.0, ObservationRule::kStopWhenPositive);
  ScreeningPolicy policy = ScreeningPolicy::FromRatio(1.0, 0.0);
  PopulationParams params = PopulationParams::Default();
  std::int64_t n_target = 5000;
  int replications = 1000;
  std::uint64_t seed = 20240917;
  // Standard deviation (years) of Gaussian noise on the plugged-in MDRI;
  // zero means the true MDRI is used.
  double mdri_noise_sd = 0.0;
  std::int64_t attempt_cap = 100'000'000;
};

// Declarative grid description. Every list-valued key expands into a
// Cartesian product, in the order rule, frr, theta (or uniform_b), r, c.
struct GridSpec {
  std::string name = "grid";
  std::uint64_t seed = 20240917;
  int replications = 1000;
  std::int64_t n_target = 5000;
  double incidence = 0.032;
  double prevalence = 0.29;
  std::optional<double> horizon;
  double assay_shape = 0.352;
  double assay_rate = 1.273;
  double assay_cutoff = 2.0;
  std::vector<double> frr = {0.0};
  std::string law = "exponential";  // or "uniform"
  std::vector<double> theta = {1.0};
  double uniform_a = 0.0;
  std::vector<double> uniform_b = {3.0};
  std::vector<ObservationRule> rules = {ObservationRule::kRegular,
                                        ObservationRule::kStopWhenPositive};
  std::vector<double> r = {1.0};
  std::vector<double> c = {0.0};
  double q0 = 1.0;
  double mdri_noise_sd = 0.0;
  std::int64_t attempt_cap = 100'000'000;

  bool operator==(const GridSpec&) const = default;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Applies `key = value` to the spec; lists are comma separated. Throws
// ConfigError for unknown keys or unparseable values.
void SetGridValue(GridSpec& spec, std::string_view key,
                  std::string_view value);

// Parses a whole config: one `key = value` per line, `#` starts a comment.
GridSpec ParseGridSpec(std::string_view text, GridSpec base = {});
GridSpec LoadGridSpec(const std::string& path, GridSpec base = {});

// Canonical `key = value` text; ParseGridSpec(FormatGridSpec(s)) == s.
std::string FormatGridSpec(const GridSpec& spec);

// Throws ConfigError for invalid parameters or duplicate labels.
std::vector<Scenario> ExpandGrid(const GridSpec& spec);

std::string ScenarioLabel(const Scenario& scenario);

// Shortest decimal that round-trips.
std::string FormatNumber(double value);

}  // namespace xsinc::harness

#endif  // XSINC_HARNESS_SCENARIO_H_
