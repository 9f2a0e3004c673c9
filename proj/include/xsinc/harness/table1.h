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

#ifndef XSINC_HARNESS_TABLE1_H_
#define XSINC_HARNESS_TABLE1_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "xsinc/population.h"
#include "xsinc/recency_model.h"

namespace xsinc::harness {

struct Table1Row {
  double c;      // exclusion window, years
  double theta;  // tests per year
  double r;
  // Stop-when-positive bias. `bias_grid` integrates with a left Riemann sum
  // on a 0.001-year lattice, `bias_exact` adaptively.
  double bias_grid;
  double bias_exact;
  bool unbiased;  // the effective MDRI equals the MDRI exactly
  double inclusion_swp;
  std::int64_t screened_swp;
  double inclusion_id;
  std::int64_t screened_id;
};

struct Table1Options {
  RecencyAssay assay = RecencyAssay::Default();
  PopulationParams params = PopulationParams::Default();
  std::int64_t n_target = 5000;
  double grid_step = 1e-3;
};

// c in {0, 0.25, 2} x theta in {1, 2} x r in {0, 0.6, 1}.
std::vector<Table1Row> EmitTable1(const Table1Options& options = {});

void WriteTable1Csv(const std::vector<Table1Row>& rows, std::ostream& out);

}  // namespace xsinc::harness

#endif  // XSINC_HARNESS_TABLE1_H_
