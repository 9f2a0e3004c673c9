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

#include "xsinc/harness/table1.h"

#include <ostream>

#include "xsinc/estimator.h"
#include "xsinc/harness/output.h"
#include "xsinc/screening_analytics.h"

namespace xsinc::harness {

std::vector<Table1Row> EmitTable1(const Table1Options& options) {
  const QuadratureRule grid = LeftRiemannGrid{options.grid_step};
  const QuadratureRule exact = AdaptiveSimpson{};
  const double cutoff = options.assay.recency_cutoff();
  std::vector<Table1Row> rows;
  for (double c : {0.0, 0.25, 2.0}) {
    for (double theta : {1.0, 2.0}) {
      for (double r : {0.0, 0.6, 1.0}) {
        Table1Row row{};
        row.c = c;
        row.theta = theta;
        row.r = r;
        const auto swp = ObservationRule::kStopWhenPositive;
        row.bias_grid = AnalyticBias(options.assay, theta, r, c, swp,
                                     options.params, grid);
        row.bias_exact = AnalyticBias(options.assay, theta, r, c, swp,
                                      options.params, exact);
        // K(c) vanishes for c >= T*; at c = 0 and r = 1 its coefficient does.
        row.unbiased = c >= cutoff || (c == 0.0 && r == 1.0);
        const auto f_swp = ForecastScreening(swp, options.params, theta, r, c,
                                             options.n_target);
        const auto f_id = ForecastScreening(ObservationRule::kRegular,
                                            options.params, theta, r, c,
                                            options.n_target);
        row.inclusion_swp = f_swp.inclusion_probability;
        row.screened_swp = f_swp.required_screened;
        row.inclusion_id = f_id.inclusion_probability;
        row.screened_id = f_id.required_screened;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void WriteTable1Csv(const std::vector<Table1Row>& rows, std::ostream& out) {
  out << "c,theta,r,bias_grid,bias_exact,unbiased,inclusion_swp,"
         "screened_swp,inclusion_id,screened_id\n";
  for (const auto& row : rows) {
    out << FormatField(row.c) << ',' << FormatField(row.theta) << ','
        << FormatField(row.r) << ',' << FormatField(row.bias_grid) << ','
        << FormatField(row.bias_exact) << ',' << (row.unbiased ? 1 : 0) << ','
        << FormatField(row.inclusion_swp) << ',' << row.screened_swp << ','
        << FormatField(row.inclusion_id) << ',' << row.screened_id << '\n';
  }
}

}  // namespace xsinc::harness
