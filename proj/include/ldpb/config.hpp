// Copyright 2026 The LDP Bandits Authors
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

// Experiment configuration and its flat text file format.
//
// One experiment per file, one `key = value` per line, `#` starts a comment:
//
//   mechanism = linear            # linear | quadratic | exponential
//   epsilon = 1                   # positive decimal or "inf"
//   b = 0                         # quadratic shape, 0 <= b <= 2(e^eps - 1)
//   agent = ts                    # ts | ucb
//   horizon = 50000
//   trials = 50
//   seed = 1
//   checkpoints = geometric:100   # or an explicit list "1,10,100"
//   arms = bernoulli(0.9)x1; beta(4,1)x5; twopoint(0.4,1,0.5)x5; uniform(0,1)
//
// Arm groups are separated by ';' and take an optional "xCOUNT" suffix.

#ifndef LDPB_CONFIG_HPP_
#define LDPB_CONFIG_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ldpb/agents.hpp"
#include "ldpb/distributions.hpp"
#include "ldpb/errors.hpp"
#include "ldpb/format.hpp"
#include "ldpb/mechanism.hpp"

namespace ldpb {

struct ArmGroup {
  ArmDistribution distribution;
  std::size_t count = 1;
};

struct GeometricCheckpoints {
  std::size_t count = 100;
  friend bool operator==(const GeometricCheckpoints&,
                         const GeometricCheckpoints&) = default;
};

using CheckpointSpec =
    std::variant<GeometricCheckpoints, std::vector<std::uint64_t>>;

// `count` geometrically spaced integer times in [1, T], strictly increasing,
// starting at 1 and ending at T. Early targets that round onto an earlier
// time are pushed forward by one. When T < count every time 1..T is used.
inline std::vector<std::uint64_t> GeometricSchedule(std::uint64_t horizon,
                                                    std::size_t count) {
  if (horizon == 0) throw DomainError("horizon must be >= 1");
  if (count == 0) throw DomainError("checkpoint count must be >= 1");
  if (count == 1) return {horizon};
  std::vector<std::uint64_t> out;
  if (horizon <= count) {
    for (std::uint64_t t = 1; t <= horizon; ++t) out.push_back(t);
    return out;
  }
  out.reserve(count);
  const double log_t = std::log(static_cast<double>(horizon));
  for (std::size_t k = 0; k < count; ++k) {
    const double frac =
        static_cast<double>(k) / static_cast<double>(count - 1);
    auto t = static_cast<std::uint64_t>(std::llround(std::exp(frac * log_t)));
    const std::uint64_t lowest = out.empty() ? 1 : out.back() + 1;
    const std::uint64_t highest = horizon - (count - 1 - k);
    out.push_back(std::clamp(t, lowest, highest));
  }
  return out;
}

struct ExperimentConfig {
  std::vector<ArmGroup> arms;
  MechanismKind mechanism = MechanismKind::kLinear;
  double epsilon = 1.0;
  double b = 0.0;
  AgentKind agent = AgentKind::kThompson;
  std::uint64_t horizon = 50000;
  std::uint64_t trials = 50;
  std::uint64_t seed = 1;
  CheckpointSpec checkpoints = GeometricCheckpoints{};

  BanditEnvironment Environment() const {
    std::vector<ArmDistribution> flat;
    for (const auto& g : arms) {
      for (std::size_t k = 0; k < g.count; ++k) flat.push_back(g.distribution);
    }
    return BanditEnvironment(std::move(flat));
  }

  Mechanism MakeMechanism() const {
    return Mechanism::Make(mechanism, PrivacyBudget::Of(epsilon), b);
  }

  std::vector<std::uint64_t> CheckpointTimes() const {
    if (const auto* g = std::get_if<GeometricCheckpoints>(&checkpoints)) {
      return GeometricSchedule(horizon, g->count);
    }
    return std::get<std::vector<std::uint64_t>>(checkpoints);
  }
};

// Throws ConfigError describing the first violated constraint.
inline void Validate(const ExperimentConfig& config) {
  if (config.arms.empty()) throw ConfigError("config has no arms");
  for (const auto& g : config.arms) {
    if (g.count == 0) throw ConfigError("arm group count must be >= 1");
  }
  if (config.horizon < 1) throw ConfigError("horizon must be >= 1");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  try {
    (void)config.MakeMechanism();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (const auto* list =
          std::get_if<std::vector<std::uint64_t>>(&config.checkpoints)) {
    if (list->empty()) throw ConfigError("checkpoint list is empty");
    if (!std::is_sorted(list->begin(), list->end()) ||
        std::adjacent_find(list->begin(), list->end()) != list->end()) {
      throw ConfigError("checkpoints must be strictly increasing");
    }
    if (list->front() < 1 || list->back() > config.horizon) {
      throw ConfigError("checkpoints must lie in [1, horizon]");
    }
  } else if (std::get<GeometricCheckpoints>(config.checkpoints).count == 0) {
    throw ConfigError("geometric checkpoint count must be >= 1");
  }
}

namespace detail {

inline std::string_view Trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(Trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline double ParseReal(std::string_view key, std::string_view s) {
  double v = 0.0;
  if (!ParseDouble(Trim(s), v)) {
    throw ConfigError(std::string(key) + ": not a number: '" + std::string(s) +
                      "'");
  }
  return v;
}

inline std::uint64_t ParseCount(std::string_view key, std::string_view s) {
  s = Trim(s);
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError(std::string(key) +
                      ": not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

inline ArmDistribution ParseArm(std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos || close != text.size() - 1) {
    throw ConfigError("arm must look like name(params): '" + std::string(text) +
                      "'");
  }
  const std::string_view name = Trim(text.substr(0, open));
  std::vector<double> params;
  for (auto p : Split(text.substr(open + 1, close - open - 1), ',')) {
    params.push_back(ParseReal("arms", p));
  }
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw ConfigError(std::string(name) + " takes " + std::to_string(n) +
                        " parameter(s)");
    }
  };
  try {
    if (name == "bernoulli") {
      expect(1);
      return ArmDistribution::MakeBernoulli(params[0]);
    }
    if (name == "beta") {
      expect(2);
      return ArmDistribution::MakeBeta(params[0], params[1]);
    }
    if (name == "twopoint") {
      expect(3);
      return ArmDistribution::MakeTwoPoint(params[0], params[1], params[2]);
    }
    if (name == "uniform") {
      expect(2);
      return ArmDistribution::MakeUniform(params[0], params[1]);
    }
  } catch (const DomainError& e) {
    throw ConfigError(std::string("arms: ") + e.what());
  }
  throw ConfigError("unknown arm distribution '" + std::string(name) + "'");
}

}  // namespace detail

inline std::vector<ArmGroup> ParseArms(std::string_view text) {
  std::vector<ArmGroup> groups;
  for (auto item : detail::Split(text, ';')) {
    if (item.empty()) continue;
    std::size_t count = 1;
    const auto close = item.rfind(')');
    if (close != std::string_view::npos && close + 1 < item.size()) {
      auto suffix = detail::Trim(item.substr(close + 1));
      if (suffix.empty() || suffix.front() != 'x') {
        throw ConfigError("arm count suffix must be xN: '" + std::string(item) +
                          "'");
      }
      count = detail::ParseCount("arms", suffix.substr(1));
      item = detail::Trim(item.substr(0, close + 1));
    }
    groups.push_back({detail::ParseArm(item), count});
  }
  if (groups.empty()) throw ConfigError("arms: no arm groups given");
  return groups;
}

inline std::string FormatArms(const std::vector<ArmGroup>& arms) {
  std::string out;
  for (std::size_t i = 0; i < arms.size(); ++i) {
    if (i > 0) out += "; ";
    out += ToString(arms[i].distribution) + "x" + std::to_string(arms[i].count);
  }
  return out;
}

inline CheckpointSpec ParseCheckpoints(std::string_view text) {
  text = detail::Trim(text);
  constexpr std::string_view kGeometric = "geometric:";
  if (text.substr(0, kGeometric.size()) == kGeometric) {
    return GeometricCheckpoints{static_cast<std::size_t>(
        detail::ParseCount("checkpoints", text.substr(kGeometric.size())))};
  }
  std::vector<std::uint64_t> list;
  for (auto item : detail::Split(text, ',')) {
    list.push_back(detail::ParseCount("checkpoints", item));
  }
  return list;
}

inline std::string FormatCheckpoints(const CheckpointSpec& spec) {
  if (const auto* g = std::get_if<GeometricCheckpoints>(&spec)) {
    return "geometric:" + std::to_string(g->count);
  }
  std::string out;
  for (auto t : std::get<std::vector<std::uint64_t>>(spec)) {
    if (!out.empty()) out += ',';
    out += std::to_string(t);
  }
  return out;
}

inline constexpr std::array<std::string_view, 9> kConfigKeys = {
    "mechanism", "epsilon", "b",           "agent", "horizon",
    "trials",    "seed",    "checkpoints", "arms"};

// Sets one key from its text value; shared by the file parser and CLI flags.
inline void SetConfigValue(ExperimentConfig& config, std::string_view key,
                           std::string_view value) {
  value = detail::Trim(value);
  if (key == "mechanism") {
    const auto kind = ParseMechanismKind(value);
    if (!kind) throw ConfigError("unknown mechanism '" + std::string(value) + "'");
    config.mechanism = *kind;
  } else if (key == "epsilon") {
    config.epsilon = detail::ParseReal(key, value);
  } else if (key == "b") {
    config.b = detail::ParseReal(key, value);
  } else if (key == "agent") {
    const auto kind = ParseAgentKind(value);
    if (!kind) throw ConfigError("unknown agent '" + std::string(value) + "'");
    config.agent = *kind;
  } else if (key == "horizon") {
    config.horizon = detail::ParseCount(key, value);
  } else if (key == "trials") {
    config.trials = detail::ParseCount(key, value);
  } else if (key == "seed") {
    config.seed = detail::ParseCount(key, value);
  } else if (key == "checkpoints") {
    config.checkpoints = ParseCheckpoints(value);
  } else if (key == "arms") {
    config.arms = ParseArms(value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

// Parses a config document. Keys may appear at most once; `arms` is
// required, the others default to the ExperimentConfig defaults. The result
// is not validated; call Validate after applying any overrides.
inline ExperimentConfig ParseConfig(std::istream& in) {
  ExperimentConfig config;
  std::set<std::string, std::less<>> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = detail::Trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string key(detail::Trim(view.substr(0, eq)));
    if (!seen.insert(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        key + "'");
    }
    try {
      SetConfigValue(config, key, view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!seen.contains("arms")) throw ConfigError("config is missing 'arms'");
  return config;
}

inline ExperimentConfig ParseConfig(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseConfig(in);
}

// Canonical text form; ParseConfig(SerializeConfig(c)) reproduces c.
inline std::string SerializeConfig(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "mechanism = " << ToString(config.mechanism) << '\n'
      << "epsilon = " << FormatDouble(config.epsilon) << '\n'
      << "b = " << FormatDouble(config.b) << '\n'
      << "agent = " << ToString(config.agent) << '\n'
      << "horizon = " << config.horizon << '\n'
      << "trials = " << config.trials << '\n'
      << "seed = " << config.seed << '\n'
      << "checkpoints = " << FormatCheckpoints(config.checkpoints) << '\n'
      << "arms = " << FormatArms(config.arms) << '\n';
  return out.str();
}

// The 20-arm benchmark: one Bernoulli(0.9) optimal arm, five Beta(4, 1)
// arms (mean 0.8), five arms on {0.4, 1} with equal odds (mean 0.7), five
// Bernoulli(0.6) arms and four Uniform(0, 1) arms (mean 0.5); 50 trials.
inline ExperimentConfig Fig2Preset() {
  ExperimentConfig config;
  config.arms = {
      {ArmDistribution::MakeBernoulli(0.9), 1},
      {ArmDistribution::MakeBeta(4.0, 1.0), 5},
      {ArmDistribution::MakeTwoPoint(0.4, 1.0, 0.5), 5},
      {ArmDistribution::MakeBernoulli(0.6), 5},
      {ArmDistribution::MakeUniform(0.0, 1.0), 4},
  };
  config.trials = 50;
  return config;
}

}  // namespace ldpb

#endif  // LDPB_CONFIG_HPP_
