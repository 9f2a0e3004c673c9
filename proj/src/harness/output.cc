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

#include <boost/version.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace xsinc::harness {

const std::vector<std::string> kReplicationColumns = {
    "label",  "replication", "status",     "n_total",  "n_pos",   "n_neg",
    "n_rec",  "n_screened",  "mdri_hat",   "estimate", "negative"};

const std::vector<std::string> kSummaryColumns = {
    "label",          "status",
    "rule",           "law",
    "theta",          "uniform_a",
    "uniform_b",      "assay_shape",
    "assay_rate",     "cutoff",
    "frr",            "q0",
    "q1",             "r",
    "c",              "incidence",
    "prevalence",     "n_target",
    "replications",   "seed",
    "n_defined",      "n_undefined",
    "n_negative",     "median",
    "mean",           "p025",
    "p975",           "var_log",
    "n_log",          "mean_screened",
    "effective_mdri", "analytic_bias",
    "analytic_log_variance", "p_star",
    "p_r",            "expected_screened",
    "analytic_stochastic", "analytic_error",
    "error"};

std::string FormatField(double value) {
  if (std::isnan(value)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string Opt(const std::optional<double>& v) {
  return v ? FormatField(*v) : "";
}

void WriteRow(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << QuoteCsv(fields[i]);
  }
  out << '\n';
}

}  // namespace

std::string QuoteCsv(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void WriteReplicationsCsv(const std::vector<ScenarioResult>& results,
                          std::ostream& out) {
  WriteRow(out, kReplicationColumns);
  for (const auto& res : results) {
    for (const auto& rec : res.replications) {
      const bool defined = rec.estimate.defined();
      WriteRow(out, {res.scenario.label, std::to_string(rec.replication),
                     defined ? "defined" : "undefined",
                     std::to_string(rec.counts.n_total),
                     std::to_string(rec.counts.n_pos),
                     std::to_string(rec.counts.n_neg),
                     std::to_string(rec.counts.n_rec),
                     std::to_string(rec.counts.n_screened),
                     FormatField(rec.mdri_hat),
                     defined ? FormatField(rec.estimate.value) : "",
                     rec.estimate.negative() ? "1" : "0"});
    }
  }
}

void WriteSummaryCsv(const std::vector<ScenarioResult>& results,
                     std::ostream& out) {
  WriteRow(out, kSummaryColumns);
  for (const auto& res : results) {
    const Scenario& s = res.scenario;
    std::string law = "exponential";
    std::string theta, a, b;
    if (const auto* u = std::get_if<UniformLaw>(&s.process.law())) {
      law = "uniform";
      a = FormatField(u->a);
      b = FormatField(u->b);
    } else {
      theta = FormatField(s.process.theta());
    }
    const bool ok = res.status == ScenarioStatus::kOk;
    const ScenarioSummary& m = res.summary;
    auto count = [ok](std::int64_t v) {
      return ok ? std::to_string(v) : std::string();
    };
    auto real = [ok](double v) { return ok ? FormatField(v) : std::string(); };
    const AnalyticSummary& an = res.analytic;
    WriteRow(out,
             {s.label,
              ToString(res.status),
              ToString(s.process.rule()),
              law,
              theta,
              a,
              b,
              FormatField(s.assay.gamma_shape()),
              FormatField(s.assay.gamma_rate()),
              FormatField(s.assay.recency_cutoff()),
              FormatField(s.assay.frr()),
              FormatField(s.policy.q0()),
              FormatField(s.policy.q1()),
              FormatField(s.policy.ratio()),
              FormatField(s.policy.exclusion_window()),
              FormatField(s.params.incidence()),
              FormatField(s.params.prevalence()),
              std::to_string(s.n_target),
              std::to_string(s.replications),
              std::to_string(s.seed),
              count(m.n_defined),
              count(m.n_undefined),
              count(m.n_negative),
              real(m.median),
              real(m.mean),
              real(m.p025),
              real(m.p975),
              real(m.var_log),
              count(m.n_log),
              real(m.mean_screened),
              Opt(an.effective_mdri),
              Opt(an.bias),
              Opt(an.log_variance),
              Opt(an.p_star),
              Opt(an.p_r),
              Opt(an.expected_screened),
              an.stochastic ? "1" : "0",
              an.error,
              res.error});
  }
}

std::size_t CsvTable::Column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("CsvTable: no column '" + std::string(name) + "'");
}

CsvTable ReadCsv(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  char ch;
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (quoted) throw std::runtime_error("ReadCsv: unterminated quote");
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  CsvTable table;
  if (records.empty()) return table;
  table.header = std::move(records.front());
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != table.header.size()) {
      throw std::runtime_error("ReadCsv: row " + std::to_string(i) +
                               " has the wrong number of fields");
    }
    table.rows.push_back(std::move(records[i]));
  }
  return table;
}

CsvTable ReadCsvFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ReadCsv(in);
}

std::string ManifestJson(const std::vector<ScenarioResult>& results,
                         const RunInfo& info) {
  nlohmann::ordered_json j;
  j["tool"] = "xsinc";
  j["command"] = info.command;
  j["seed"] = info.seed;
  j["workers"] = info.workers;
  j["wall_seconds"] = info.wall_seconds;
  j["versions"] = {
      {"xsinc", "0.1.0"},
      {"boost", BOOST_LIB_VERSION},
      {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
      {"compiler", __VERSION__},
  };
  j["config"] = info.config;
  std::int64_t ok = 0;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    if (r.status == ScenarioStatus::kOk) {
      ++ok;
    } else {
      failures.push_back({{"label", r.scenario.label},
                          {"status", ToString(r.status)},
                          {"error", r.error}});
    }
  }
  j["scenarios"] = results.size();
  j["scenarios_ok"] = ok;
  j["failures"] = failures;
  j["files"] = {"replications.csv", "summary.csv"};
  return j.dump(2) + "\n";
}

void WriteRunOutputs(const std::filesystem::path& dir,
                     const std::vector<ScenarioResult>& results,
                     const RunInfo& info) {
  std::filesystem::create_directories(dir);
  auto open = [&dir](const char* name) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    return out;
  };
  {
    auto out = open("replications.csv");
    WriteReplicationsCsv(results, out);
  }
  {
    auto out = open("summary.csv");
    WriteSummaryCsv(results, out);
  }
  {
    auto out = open("manifest.json");
    out << ManifestJson(results, info);
  }
}

}  // namespace xsinc::harness
