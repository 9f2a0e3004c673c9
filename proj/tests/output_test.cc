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

#include "xsinc/harness/output.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <map>
#include <sstream>

#include "gtest/gtest.h"
#include "xsinc/harness/presets.h"

namespace xsinc::harness {
namespace {

TEST(CsvTest, FormatField) {
  EXPECT_EQ(FormatField(std::numeric_limits<double>::quiet_NaN()), "");
  EXPECT_EQ(FormatField(2.0), "2");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::strtod(FormatField(x).c_str(), nullptr), x);
}

TEST(CsvTest, QuotingRoundTrip) {
  EXPECT_EQ(QuoteCsv("plain"), "plain");
  EXPECT_EQ(QuoteCsv("a,b"), "\"a,b\"");
  EXPECT_EQ(QuoteCsv("say \"hi\""), "\"say \"\"hi\"\"\"");
  std::istringstream in("x,y\n\"a,b\",\"q\"\"q\"\n\"multi\nline\",\r\n");
  const CsvTable t = ReadCsv(in);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][0], "a,b");
  EXPECT_EQ(t.rows[0][1], "q\"q");
  EXPECT_EQ(t.rows[1][0], "multi\nline");
  EXPECT_EQ(t.rows[1][1], "");
  EXPECT_EQ(t.Column("y"), 1u);
  EXPECT_THROW(t.Column("z"), std::out_of_range);
}

TEST(CsvTest, RaggedRowsRejected) {
  std::istringstream in("a,b\n1\n");
  EXPECT_THROW(ReadCsv(in), std::runtime_error);
  std::istringstream open_quote("a\n\"x\n");
  EXPECT_THROW(ReadCsv(open_quote), std::runtime_error);
}

std::vector<ScenarioResult> SmallRun() {
  GridSpec spec = MainGrid();
  spec.theta = {1.0};
  spec.r = {0.0, 1.0};
  spec.c = {0.0, 2.0};
  spec.frr = {0.0, 0.02};
  spec.replications = 25;
  spec.n_target = 300;
  return RunGrid(spec);
}

double Parse(const std::string& s) {
  return s.empty() ? std::numeric_limits<double>::quiet_NaN()
                   : std::strtod(s.c_str(), nullptr);
}

TEST(OutputTest, SchemasAndRowCounts) {
  const auto results = SmallRun();
  std::ostringstream reps, summary;
  WriteReplicationsCsv(results, reps);
  WriteSummaryCsv(results, summary);
  std::istringstream r_in(reps.str()), s_in(summary.str());
  const CsvTable r = ReadCsv(r_in);
  const CsvTable s = ReadCsv(s_in);
  EXPECT_EQ(r.header, kReplicationColumns);
  EXPECT_EQ(s.header, kSummaryColumns);
  EXPECT_EQ(r.rows.size(), results.size() * 25);
  EXPECT_EQ(s.rows.size(), results.size());
}

// Summaries recomputed from the emitted per-replication rows reproduce the
// emitted summary block field for field.
TEST(OutputTest, SummaryRecomputableFromReplicationRows) {
  const auto results = SmallRun();
  std::ostringstream reps, summary;
  WriteReplicationsCsv(results, reps);
  WriteSummaryCsv(results, summary);
  std::istringstream r_in(reps.str()), s_in(summary.str());
  const CsvTable r = ReadCsv(r_in);
  const CsvTable s = ReadCsv(s_in);

  std::map<std::string, std::vector<IncidenceEstimate>> estimates;
  std::map<std::string, std::vector<std::int64_t>> screened;
  for (const auto& row : r.rows) {
    const std::string& label = row[r.Column("label")];
    IncidenceEstimate e;
    if (row[r.Column("status")] == "defined") {
      e.status = EstimateStatus::kDefined;
      e.value = Parse(row[r.Column("estimate")]);
    }
    estimates[label].push_back(e);
    screened[label].push_back(std::stoll(row[r.Column("n_screened")]));
  }
  int negatives = 0;
  for (const auto& row : s.rows) {
    const std::string& label = row[s.Column("label")];
    const ScenarioSummary m = Summarize(estimates.at(label), screened.at(label));
    negatives += static_cast<int>(m.n_negative);
    EXPECT_EQ(row[s.Column("n_defined")], std::to_string(m.n_defined));
    EXPECT_EQ(row[s.Column("n_undefined")], std::to_string(m.n_undefined));
    EXPECT_EQ(row[s.Column("n_negative")], std::to_string(m.n_negative));
    EXPECT_EQ(row[s.Column("n_log")], std::to_string(m.n_log));
    EXPECT_EQ(row[s.Column("median")], FormatField(m.median)) << label;
    EXPECT_EQ(row[s.Column("mean")], FormatField(m.mean)) << label;
    EXPECT_EQ(row[s.Column("p025")], FormatField(m.p025)) << label;
    EXPECT_EQ(row[s.Column("p975")], FormatField(m.p975)) << label;
    EXPECT_EQ(row[s.Column("var_log")], FormatField(m.var_log)) << label;
    EXPECT_EQ(row[s.Column("mean_screened")], FormatField(m.mean_screened));
  }
  // Small surveys with a 2% FRR produce some negative estimates.
  EXPECT_GT(negatives, 0);
}

TEST(OutputTest, WritesRunDirectoryWithManifest) {
  const auto dir = std::filesystem::temp_directory_path() / "xsinc_output_test";
  std::filesystem::remove_all(dir);
  const auto results = SmallRun();
  RunInfo info;
  info.command = "grid";
  info.config = FormatGridSpec(MainGrid());
  info.seed = 20240917;
  info.workers = 2;
  WriteRunOutputs(dir, results, info);
  for (const char* f : {"replications.csv", "summary.csv", "manifest.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  std::ifstream in(dir / "manifest.json");
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["seed"], 20240917u);
  EXPECT_EQ(j["scenarios"], results.size());
  EXPECT_EQ(j["scenarios_ok"], results.size());
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_TRUE(j["versions"].contains("boost"));
  EXPECT_EQ(ParseGridSpec(j["config"].get<std::string>()), MainGrid());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace xsinc::harness
