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

// Acceptance checks. Prints one PASS/FAIL line per criterion, with indented
// detail lines, and exits nonzero if any criterion fails.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "stat_util.h"
#include "xsinc/estimator.h"
#include "xsinc/harness/grid_runner.h"
#include "xsinc/harness/output.h"
#include "xsinc/harness/presets.h"
#include "xsinc/harness/table1.h"
#include "xsinc/recency_model.h"
#include "xsinc/screening_analytics.h"
#include "xsinc/testing_history.h"

namespace {

using namespace xsinc;
using namespace xsinc::harness;
using Clock = std::chrono::steady_clock;

constexpr auto kRegular = ObservationRule::kRegular;
constexpr auto kSwp = ObservationRule::kStopWhenPositive;
constexpr double kLambda = 0.032;

int failures = 0;

void Report(const std::string& id, bool pass, const std::string& text) {
  std::printf("%s %s %s\n", id.c_str(), pass ? "PASS" : "FAIL", text.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void Detail(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
void Detail(const char* fmt, ...) {
  std::printf("    ");
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Published Table 1, rows in EmitTable1 order. NaN marks a checkmark row.
struct Reference {
  double bias_e3;
  double screened;
};
const Reference kTable1[18] = {
    {-9.95, 5000},  {-3.98, 5000}, {NAN, 5000},   {-15.03, 5000},
    {-6.01, 5000},  {NAN, 5000},   {-5.93, 6350}, {-1.36, 6100},
    {1.68, 6000},   {-8.97, 8200}, {-0.10, 7350}, {5.82, 7000},
    {NAN, 34800},   {NAN, 18750},  {NAN, 15300},  {NAN, 25685},
    {NAN, 28850},   {NAN, 20200}};
constexpr int kFlaggedScreeningRow = 15;

void CheckTable1Bias() {
  const auto start = Clock::now();
  const auto rows = EmitTable1();
  const double elapsed = Seconds(start);
  bool ok = rows.size() == 18;
  double worst = 0.0, worst_exact = 0.0;
  int numeric = 0, zeros = 0;
  for (std::size_t i = 0; i < rows.size() && i < 18; ++i) {
    const auto& row = rows[i];
    if (std::isnan(kTable1[i].bias_e3)) {
      ++zeros;
      ok = ok && row.unbiased && row.bias_grid == 0.0;
      continue;
    }
    ++numeric;
    const double dev = std::abs(row.bias_grid * 1e3 - kTable1[i].bias_e3);
    const double dev_exact = std::abs(row.bias_exact * 1e3 - kTable1[i].bias_e3);
    worst = std::max(worst, dev);
    worst_exact = std::max(worst_exact, dev_exact);
    ok = ok && dev <= 0.02;
    Detail("c=%-4g theta=%g r=%-3g published %+6.2f  grid %+8.4f  exact "
           "%+8.4f (x1e-3)%s",
           row.c, row.theta, row.r, kTable1[i].bias_e3, row.bias_grid * 1e3,
           row.bias_exact * 1e3, dev_exact > 0.02 ? "  exact rule outside" : "");
  }
  ok = ok && elapsed < 5.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Table 1 bias: %d entries max |dev| %.4f x1e-3 (tol 0.02) on "
                "the 0.001-yr grid, %d unbiased rows exactly 0, %.2f s (< 5 s)"
                "; adaptive-rule max |dev| %.4f",
                numeric, worst, zeros, elapsed, worst_exact);
  Report("AC1", ok, buf);
}

void CheckScreening() {
  const auto rows = EmitTable1();
  bool ok = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double ref = kTable1[i].screened;
    const double got = static_cast<double>(rows[i].screened_swp);
    const double rel = std::abs(got - ref) / ref;
    if (static_cast<int>(i) == kFlaggedScreeningRow) {
      Detail("c=%g theta=%g r=%g published %.0f  computed %.0f  (flagged "
             "row, rel dev %.3f)",
             rows[i].c, rows[i].theta, rows[i].r, ref, got, rel);
      continue;
    }
    worst = std::max(worst, rel);
    ok = ok && rel <= 0.02;
    Detail("c=%-4g theta=%g r=%-3g published %6.0f  computed %6.0f  rel %.4f",
           rows[i].c, rows[i].theta, rows[i].r, ref, got, rel);
  }
  const auto& r0 = rows[kFlaggedScreeningRow];
  const auto& r6 = rows[kFlaggedScreeningRow + 1];
  const auto& r10 = rows[kFlaggedScreeningRow + 2];
  const bool monotone =
      r0.screened_swp > r6.screened_swp && r6.screened_swp > r10.screened_swp;
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "required screening: 11 counts max rel dev %.4f (tol 0.02); "
                "theta=2 c=2 row evaluated: %lld / %lld / %lld for r = 0 / "
                "0.6 / 1, %s in r",
                worst, static_cast<long long>(r0.screened_swp),
                static_cast<long long>(r6.screened_swp),
                static_cast<long long>(r10.screened_swp),
                monotone ? "monotone decreasing" : "non-monotone");
  Report("AC2", ok, buf);
}

void CheckEffectiveMdri() {
  const auto start = Clock::now();
  const RecencyAssay assay = RecencyAssay::Default();
  double worst = 0.0;
  int cells = 0;
  for (auto rule : {kRegular, kSwp}) {
    for (double theta : {0.4, 1.0, 1.5, 2.0}) {
      for (double r : {0.0, 0.3, 0.6, 1.0}) {
        for (double c : {0.0, 0.25, 1.0, 1.5, 2.0}) {
          const double closed = EffectiveMdriClosed(assay, theta, r, c, rule);
          const double numeric = EffectiveMdriNumeric(
              {assay, TestingProcess::Exponential(theta, rule), r, c,
               PopulationParams::Default()});
          worst = std::max(worst, std::abs(numeric / closed - 1.0));
          ++cells;
        }
      }
    }
  }
  const double elapsed = Seconds(start);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "closed vs quadrature effective MDRI: %d cells, max rel dev "
                "%.2e (tol 1e-6), %.2f s (< 10 s)",
                cells, worst, elapsed);
  Report("AC3", worst <= 1e-6 && elapsed < 10.0, buf);
}

Scenario MakeScenario(ObservationRule rule, double theta, double r, double c,
                      int reps) {
  GridSpec spec = MainGrid();
  spec.rules = {rule};
  spec.theta = {theta};
  spec.r = {r};
  spec.c = {c};
  spec.replications = reps;
  return ExpandGrid(spec).front();
}

// Standard error of a sample median from the replicate spread.
double MedianSe(const ScenarioResult& res) {
  std::vector<double> v;
  for (const auto& rec : res.replications) v.push_back(rec.estimate.value);
  return 1.2533 * std::sqrt(SampleVariance(v) / v.size());
}

std::map<std::string, ScenarioResult> Run(const std::vector<Scenario>& s,
                                          double* seconds) {
  const auto start = Clock::now();
  RunOptions options;
  options.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::map<std::string, ScenarioResult> out;
  for (auto& r : RunScenarios(s, options)) out[r.scenario.label] = std::move(r);
  if (seconds) *seconds = Seconds(start);
  return out;
}

void CheckUnbiasedness(int reps) {
  std::vector<Scenario> s = {MakeScenario(kSwp, 1, 1, 0, reps),
                             MakeScenario(kSwp, 1, 1, 2, reps)};
  for (double c : {0.0, 0.25, 1.0, 1.5, 2.0}) {
    s.push_back(MakeScenario(kRegular, 1, 1, c, reps));
  }
  double seconds = 0.0;
  const auto res = Run(s, &seconds);
  bool ok = seconds < 300.0;
  double worst = 0.0;
  for (const auto& sc : s) {
    const auto& r = res.at(sc.label);
    ok = ok && r.status == ScenarioStatus::kOk;
    const double dev = std::abs(r.summary.median - kLambda);
    worst = std::max(worst, dev);
    ok = ok && dev <= 0.002;
    Detail("%-28s median %.5f  dev %+.5f  undefined %lld", sc.label.c_str(),
           r.summary.median, r.summary.median - kLambda,
           static_cast<long long>(r.summary.n_undefined));
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "unbiasedness at N=5000, %d reps: %zu scenarios max |median - "
                "0.032| %.5f (tol 0.002), %.1f s (< 300 s)",
                reps, s.size(), worst, seconds);
  Report("AC4", ok, buf);
}

void CheckBiasDirection(int reps) {
  std::vector<Scenario> s;
  for (double r : {0.0, 0.3, 0.6, 1.0}) s.push_back(MakeScenario(kSwp, 1, r, 0, reps));
  s.push_back(MakeScenario(kSwp, 1, 1, 1, reps));
  const auto res = Run(s, nullptr);
  bool ok = true;
  std::string medians;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& r = res.at(s[i].label);
    ok = ok && r.status == ScenarioStatus::kOk;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.5f", i ? " < " : "", r.summary.median);
    medians += buf;
    if (i > 0) {
      const auto& prev = res.at(s[i - 1].label);
      const double diff = r.summary.median - prev.summary.median;
      const double se = std::hypot(MedianSe(r), MedianSe(prev));
      Detail("r %g -> %g: median rises %+.5f (%.1f SE)",
             prev.scenario.policy.ratio(), r.scenario.policy.ratio(), diff,
             diff / se);
      ok = ok && diff > 3.0 * se;
    }
  }
  const auto& over = res.at(s[4].label);
  const double se = MedianSe(over);
  const double excess = over.summary.median - kLambda;
  ok = ok && excess > 3.0 * se;
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "bias direction, %d reps: SWP theta=1 c=0 medians by r "
                "{0,0.3,0.6,1}: %s, each step > 3 SE; SWP theta=1 r=1 c=1 "
                "median %.5f exceeds 0.032 by %.1f SE (need > 3)",
                reps, medians.c_str(), over.summary.median, excess / se);
  Report("AC5", ok, buf);
}

void CheckVariance(int reps) {
  std::vector<Scenario> s = {MakeScenario(kSwp, 1, 1, 0, reps),
                             MakeScenario(kSwp, 1, 1, 2, reps)};
  for (double theta : {1.5, 2.0}) {
    s.push_back(MakeScenario(kSwp, theta, 1, 0, reps));
    s.push_back(MakeScenario(kSwp, theta, 1, 2, reps));
  }
  const auto res = Run(s, nullptr);
  const auto formula = [](const ScenarioResult& r) {
    return LogVariance(r.scenario.n_target, *r.analytic.p_star,
                       *r.analytic.p_r);
  };
  const auto& base = res.at(s[0].label);
  const auto& excl = res.at(s[1].label);
  const double rel = base.summary.var_log / formula(base) - 1.0;
  const double ratio = excl.summary.var_log / base.summary.var_log;
  Detail("theta=1 c=0: p*=%.4f p_r=%.5f formula %.5f empirical %.5f (%+.1f%%)",
         *base.analytic.p_star, *base.analytic.p_r, formula(base),
         base.summary.var_log, 100 * rel);
  Detail("theta=1 c=2: p*=%.4f p_r=%.5f formula %.5f empirical %.5f, "
         "formula ratio %.2f",
         *excl.analytic.p_star, *excl.analytic.p_r, formula(excl),
         excl.summary.var_log, formula(excl) / formula(base));
  for (std::size_t i = 2; i + 1 < s.size(); i += 2) {
    const auto& a = res.at(s[i].label);
    const auto& b = res.at(s[i + 1].label);
    Detail("theta=%g (information only): var c=2 / var c=0 = %.2f empirical, "
           "%.2f formula",
           a.scenario.process.theta(), b.summary.var_log / a.summary.var_log,
           formula(b) / formula(a));
  }
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "log-variance, %d reps: theta=1 r=1 c=0 empirical vs formula "
                "%+.1f%% (tol 15%%); SWP theta=1 r=1 c=2 over c=0 variance "
                "ratio %.2f (need >= 3)",
                reps, 100 * rel, ratio);
  Report("AC6", std::abs(rel) <= 0.15 && ratio >= 3.0, buf);
}

double UniformResidualCdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= b) return 1.0;
  if (x <= a) return 2.0 * x / (a + b);
  return (-x * x + 2.0 * b * x - a * a) / (b * b - a * a);
}

double SwpCdf(double t, double u, double theta) {
  if (t <= 0.0) return 0.0;
  if (std::isinf(t)) return 1.0;
  if (t <= u) return std::exp(-theta * (u - t)) - std::exp(-theta * u);
  return 1.0 - std::exp(-theta * t);
}

void CheckSamplers() {
  const int n = 100'000;
  double min_p = 1.0;
  bool ok = true;
  std::uint64_t seed = 7000;
  for (double theta : {0.4, 1.0, 1.5, 2.0}) {
    RandomStream rng(++seed);
    const auto process = TestingProcess::Exponential(theta, kRegular);
    std::vector<double> x(n);
    for (auto& v : x) v = SampleResidual(process, rng);
    const auto ks = testing::KsTest(x, [theta](double t) {
      return t <= 0 ? 0.0 : 1.0 - std::exp(-theta * t);
    });
    Detail("KS exponential theta=%g: D=%.5f p=%.3f", theta, ks.statistic,
           ks.p_value);
    min_p = std::min(min_p, ks.p_value);
  }
  for (double b : {3.0, 4.0}) {
    RandomStream rng(++seed);
    const auto process = TestingProcess::Uniform(0.0, b, kRegular);
    std::vector<double> x(n);
    for (auto& v : x) v = SampleResidual(process, rng);
    const auto ks = testing::KsTest(
        x, [b](double t) { return UniformResidualCdf(0.0, b, t); });
    Detail("KS uniform [0,%g]: D=%.5f p=%.3f", b, ks.statistic, ks.p_value);
    min_p = std::min(min_p, ks.p_value);
  }
  ok = min_p > 0.01;
  double min_chi = 1.0;
  for (double u : {0.5, 1.0, 3.0}) {
    for (double theta : {0.4, 2.0}) {
      const auto process = TestingProcess::Exponential(theta, kSwp);
      const int bins = 25;
      std::vector<double> edges = {0.0};
      for (int k = 1; k < bins; ++k) {
        double lo = 0.0, hi = u + 50.0 / theta;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          (SwpCdf(mid, u, theta) < static_cast<double>(k) / bins ? lo : hi) =
              mid;
        }
        edges.push_back(0.5 * (lo + hi));
      }
      edges.push_back(INFINITY);
      std::vector<double> probs;
      for (int k = 0; k < bins; ++k) {
        probs.push_back(SwpCdf(edges[k + 1], u, theta) -
                        SwpCdf(edges[k], u, theta));
      }
      std::vector<long long> counts(bins, 0);
      RandomStream rng(++seed);
      for (int i = 0; i < n; ++i) {
        const double t =
            ObserveMostRecent(SampleResidual(process, rng), u, process, rng);
        const auto it = std::upper_bound(edges.begin(), edges.end(), t);
        ++counts[static_cast<std::size_t>(it - edges.begin()) - 1];
      }
      const double p = testing::ChiSquarePValue(counts, probs);
      Detail("chi-square SWP u=%g theta=%g: p=%.3f", u, theta, p);
      min_chi = std::min(min_chi, p);
    }
  }
  ok = ok && min_chi > 0.01;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "samplers at 1e5 draws: residual-life KS min p %.3f, SWP "
                "density chi-square min p %.3f (need > 0.01)",
                min_p, min_chi);
  Report("AC7", ok, buf);
}

void CheckAssay() {
  const double mdri = YearsToDays(Mdri(RecencyAssay::Default()));
  const double phi = TestRecentProbability(2.0, RecencyAssay::Default());
  const RecencyAssay long_assay = RecencyAssay::LongMdri();
  const double long_mdri = YearsToDays(Mdri(long_assay));
  Detail("long assay untruncated gamma mean %.1f days vs truncated %.1f; "
         "the 224/248-day discrepancy is reported, not resolved",
         YearsToDays(long_assay.gamma_shape() / long_assay.gamma_rate()),
         long_mdri);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "assay: MDRI %.3f days in [97, 99], phi(T*) %.5f in [0.012, "
                "0.016], long MDRI %.2f days in [220, 228]",
                mdri, phi, long_mdri);
  Report("AC8", mdri >= 97 && mdri <= 99 && phi >= 0.012 && phi <= 0.016 &&
                    long_mdri >= 220 && long_mdri <= 228,
         buf);
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void CheckDeterminism(int reps) {
  GridSpec spec = MainGrid();
  spec.replications = reps;
  const auto root = std::filesystem::temp_directory_path() / "xsinc_ac9";
  std::filesystem::remove_all(root);
  const auto start = Clock::now();
  bool ok = true;
  for (int workers : {1, 3}) {
    RunOptions options;
    options.workers = workers;
    const auto results = RunGrid(spec, options);
    ok = ok && results.size() == 160 && AllOk(results);
    RunInfo info;
    info.command = "acceptance";
    info.config = FormatGridSpec(spec);
    info.seed = spec.seed;
    info.workers = workers;
    WriteRunOutputs(root / ("w" + std::to_string(workers)), results, info);
  }
  const bool reps_same = Slurp(root / "w1/replications.csv") ==
                         Slurp(root / "w3/replications.csv");
  const bool summary_same =
      Slurp(root / "w1/summary.csv") == Slurp(root / "w3/summary.csv");
  std::filesystem::remove_all(root);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "determinism: full default grid (160 scenarios, %d reps) with "
                "1 and 3 workers, replications.csv %s, summary.csv %s (%.1f s)",
                reps, reps_same ? "identical" : "DIFFER",
                summary_same ? "identical" : "DIFFER", Seconds(start));
  Report("AC9", ok && reps_same && summary_same, buf);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xsinc acceptance checks"};
  int reps = kDeskScaleReplications;
  int determinism_reps = 50;
  app.add_option("--reps", reps, "Replications for the Monte Carlo criteria")
      ->check(CLI::PositiveNumber);
  app.add_option("--determinism-reps", determinism_reps,
                 "Replications per scenario for the determinism run")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  ValidateDefaultAssayCalibration();
  const std::vector<std::function<void()>> checks = {
      CheckTable1Bias,
      CheckScreening,
      CheckEffectiveMdri,
      [&] { CheckUnbiasedness(reps); },
      [&] { CheckBiasDirection(reps); },
      [&] { CheckVariance(reps); },
      CheckSamplers,
      CheckAssay,
      [&] { CheckDeterminism(determinism_reps); },
  };
  for (const auto& check : checks) {
    try {
      check();
    } catch (const std::exception& e) {
      Report("AC?", false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, checks.size());
  return failures == 0 ? 0 : 1;
}
