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

#ifndef XSINC_HARNESS_OUTPUT_H_
#define XSINC_HARNESS_OUTPUT_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "xsinc/harness/grid_runner.h"

namespace xsinc::harness {

// Column schemas. Numbers use "%.17g"; missing values are empty fields.
//
// replications.csv: label, replication, status, n_total, n_pos, n_neg,
//   n_rec, n_screened, mdri_hat, estimate, negative
//   (status is "defined" or "undefined"; estimate is empty when undefined)
// summary.csv: label, status, rule, law, theta, uniform_a, uniform_b,
//   assay_shape, assay_rate, cutoff, frr, q0, q1, r, c, incidence,
//   prevalence, n_target, replications, seed, n_defined, n_undefined,
//   n_negative, median, mean, p025, p975, var_log, n_log, mean_screened,
//   effective_mdri, analytic_bias, analytic_log_variance, p_star, p_r,
//   expected_screened, analytic_stochastic, analytic_error, error
extern const std::vector<std::string> kReplicationColumns;
extern const std::vector<std::string> kSummaryColumns;

std::string FormatField(double value);
// RFC 4180 quoting when the field holds a comma, quote or line break.
std::string QuoteCsv(std::string_view field);

void WriteReplicationsCsv(const std::vector<ScenarioResult>& results,
                          std::ostream& out);
void WriteSummaryCsv(const std::vector<ScenarioResult>& results,
                     std::ostream& out);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws std::out_of_range for an unknown column.
  std::size_t Column(std::string_view name) const;
};
CsvTable ReadCsv(std::istream& in);
CsvTable ReadCsvFile(const std::filesystem::path& path);

struct RunInfo {
  std::string command;
  std::string config;  // echo of the expanded configuration
  std::uint64_t seed = 0;
  int workers = 1;
  double wall_seconds = 0.0;
};

std::string ManifestJson(const std::vector<ScenarioResult>& results,
                         const RunInfo& info);

// Writes replications.csv, summary.csv and manifest.json under `dir`,
// creating it if needed.
void WriteRunOutputs(const std::filesystem::path& dir,
                     const std::vector<ScenarioResult>& results,
                     const RunInfo& info);

}  // namespace xsinc::harness

#endif  // XSINC_HARNESS_OUTPUT_H_
