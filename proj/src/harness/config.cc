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

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "xsinc/harness/scenario.h"

namespace xsinc::harness {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitList(std::string_view value) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    const auto end = comma == std::string_view::npos ? value.size() : comma;
    const auto item = Trim(value.substr(start, end - start));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

double ParseDouble(std::string_view key, std::string_view text) {
  double out = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("config: '" + std::string(key) + "' expects a number, "
                      "got '" + std::string(text) + "'");
  }
  return out;
}

template <typename Int>
Int ParseInt(std::string_view key, std::string_view text) {
  Int out = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("config: '" + std::string(key) + "' expects an "
                      "integer, got '" + std::string(text) + "'");
  }
  return out;
}

std::vector<double> ParseDoubles(std::string_view key, std::string_view value) {
  std::vector<double> out;
  for (auto item : SplitList(value)) out.push_back(ParseDouble(key, item));
  if (out.empty()) {
    throw ConfigError("config: '" + std::string(key) + "' is empty");
  }
  return out;
}

std::string_view Scalar(std::string_view key, std::string_view value) {
  const auto items = SplitList(value);
  if (items.size() != 1) {
    throw ConfigError("config: '" + std::string(key) +
                      "' takes exactly one value");
  }
  return items.front();
}

std::string JoinNumbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += FormatNumber(values[i]);
  }
  return out;
}

}  // namespace

std::string FormatNumber(double value) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

void SetGridValue(GridSpec& spec, std::string_view key,
                  std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  if (key == "name") {
    spec.name = std::string(Scalar(key, value));
  } else if (key == "seed") {
    spec.seed = ParseInt<std::uint64_t>(key, Scalar(key, value));
  } else if (key == "replications" || key == "reps") {
    spec.replications = ParseInt<int>(key, Scalar(key, value));
  } else if (key == "n_target") {
    spec.n_target = ParseInt<std::int64_t>(key, Scalar(key, value));
  } else if (key == "incidence") {
    spec.incidence = ParseDouble(key, Scalar(key, value));
  } else if (key == "prevalence") {
    spec.prevalence = ParseDouble(key, Scalar(key, value));
  } else if (key == "horizon") {
    const auto v = Scalar(key, value);
    if (v == "auto") {
      spec.horizon.reset();
    } else {
      spec.horizon = ParseDouble(key, v);
    }
  } else if (key == "assay.shape") {
    spec.assay_shape = ParseDouble(key, Scalar(key, value));
  } else if (key == "assay.rate") {
    spec.assay_rate = ParseDouble(key, Scalar(key, value));
  } else if (key == "assay.cutoff") {
    spec.assay_cutoff = ParseDouble(key, Scalar(key, value));
  } else if (key == "assay.frr" || key == "frr") {
    spec.frr = ParseDoubles(key, value);
  } else if (key == "law") {
    const auto v = Scalar(key, value);
    if (v != "exponential" && v != "uniform") {
      throw ConfigError("config: law must be 'exponential' or 'uniform'");
    }
    spec.law = std::string(v);
  } else if (key == "theta") {
    spec.theta = ParseDoubles(key, value);
  } else if (key == "uniform.a") {
    spec.uniform_a = ParseDouble(key, Scalar(key, value));
  } else if (key == "uniform.b") {
    spec.uniform_b = ParseDoubles(key, value);
  } else if (key == "rule" || key == "rules") {
    spec.rules.clear();
    for (auto item : SplitList(value)) {
      try {
        spec.rules.push_back(ParseObservationRule(std::string(item)));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
      }
    }
    if (spec.rules.empty()) throw ConfigError("config: 'rule' is empty");
  } else if (key == "r") {
    spec.r = ParseDoubles(key, value);
  } else if (key == "c") {
    spec.c = ParseDoubles(key, value);
  } else if (key == "q0") {
    spec.q0 = ParseDouble(key, Scalar(key, value));
  } else if (key == "mdri_noise_sd") {
    spec.mdri_noise_sd = ParseDouble(key, Scalar(key, value));
  } else if (key == "attempt_cap") {
    spec.attempt_cap = ParseInt<std::int64_t>(key, Scalar(key, value));
  } else {
    throw ConfigError("config: unknown key '" + std::string(key) + "'");
  }
}

GridSpec ParseGridSpec(std::string_view text, GridSpec base) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                              : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    SetGridValue(base, line.substr(0, eq), line.substr(eq + 1));
  }
  return base;
}

GridSpec LoadGridSpec(const std::string& path, GridSpec base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGridSpec(buffer.str(), std::move(base));
}

std::string FormatGridSpec(const GridSpec& spec) {
  std::ostringstream out;
  out << "name = " << spec.name << "\n";
  out << "seed = " << spec.seed << "\n";
  out << "replications = " << spec.replications << "\n";
  out << "n_target = " << spec.n_target << "\n";
  out << "incidence = " << FormatNumber(spec.incidence) << "\n";
  out << "prevalence = " << FormatNumber(spec.prevalence) << "\n";
  out << "horizon = "
      << (spec.horizon ? FormatNumber(*spec.horizon) : std::string("auto"))
      << "\n";
  out << "assay.shape = " << FormatNumber(spec.assay_shape) << "\n";
  out << "assay.rate = " << FormatNumber(spec.assay_rate) << "\n";
  out << "assay.cutoff = " << FormatNumber(spec.assay_cutoff) << "\n";
  out << "assay.frr = " << JoinNumbers(spec.frr) << "\n";
  out << "law = " << spec.law << "\n";
  out << "theta = " << JoinNumbers(spec.theta) << "\n";
  out << "uniform.a = " << FormatNumber(spec.uniform_a) << "\n";
  out << "uniform.b = " << JoinNumbers(spec.uniform_b) << "\n";
  out << "rule = ";
  for (std::size_t i = 0; i < spec.rules.size(); ++i) {
    out << (i ? ", " : "") << ToString(spec.rules[i]);
  }
  out << "\n";
  out << "r = " << JoinNumbers(spec.r) << "\n";
  out << "c = " << JoinNumbers(spec.c) << "\n";
  out << "q0 = " << FormatNumber(spec.q0) << "\n";
  out << "mdri_noise_sd = " << FormatNumber(spec.mdri_noise_sd) << "\n";
  out << "attempt_cap = " << spec.attempt_cap << "\n";
  return out.str();
}

std::string ScenarioLabel(const Scenario& s) {
  std::string out = ToString(s.process.rule());
  if (s.process.is_exponential()) {
    out += "_exp" + FormatNumber(s.process.theta());
  } else {
    const auto& u = std::get<UniformLaw>(s.process.law());
    out += "_uni" + FormatNumber(u.a) + "-" + FormatNumber(u.b);
  }
  if (s.assay != RecencyAssay::Default().WithFrr(s.assay.frr())) {
    out += "_assay" + FormatNumber(s.assay.gamma_shape()) + "-" +
           FormatNumber(s.assay.gamma_rate());
  }
  out += "_frr" + FormatNumber(s.assay.frr());
  out += "_r" + FormatNumber(s.policy.ratio());
  out += "_c" + FormatNumber(s.policy.exclusion_window());
  return out;
}

std::vector<Scenario> ExpandGrid(const GridSpec& spec) {
  if (spec.replications < 1) {
    throw ConfigError("config: replications must be >= 1");
  }
  if (spec.n_target < 1) throw ConfigError("config: n_target must be >= 1");
  std::vector<Scenario> out;
  std::set<std::string> labels;
  try {
    const PopulationParams params(spec.incidence, spec.prevalence,
                                  spec.horizon);
    const bool exponential = spec.law == "exponential";
    const auto& rates = exponential ? spec.theta : spec.uniform_b;
    for (ObservationRule rule : spec.rules) {
      for (double frr : spec.frr) {
        const RecencyAssay assay(spec.assay_shape, spec.assay_rate,
                                 spec.assay_cutoff, frr);
        for (double rate : rates) {
          const TestingProcess process =
              exponential ? TestingProcess::Exponential(rate, rule)
                          : TestingProcess::Uniform(spec.uniform_a, rate, rule);
          for (double r : spec.r) {
            for (double c : spec.c) {
              Scenario s;
              s.assay = assay;
              s.process = process;
              s.policy = ScreeningPolicy(spec.q0, r * spec.q0, c);
              s.params = params;
              s.n_target = spec.n_target;
              s.replications = spec.replications;
              s.seed = spec.seed;
              s.mdri_noise_sd = spec.mdri_noise_sd;
              s.attempt_cap = spec.attempt_cap;
              s.label = ScenarioLabel(s);
              if (!labels.insert(s.label).second) {
                throw ConfigError("config: duplicate scenario '" + s.label +
                                  "'");
              }
              out.push_back(std::move(s));
            }
          }
        }
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (spec.mdri_noise_sd < 0.0) {
    throw ConfigError("config: mdri_noise_sd must be >= 0");
  }
  return out;
}

}  // namespace xsinc::harness
