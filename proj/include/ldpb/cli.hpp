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

// Command-line front end: `run`, `bounds`, `verify-ldp` and `preset`.
//
// Exit codes: 0 success, 1 invalid arguments or config, 2 LDP verification
// failure, 3 degenerate environment (zero minimum gap) for `bounds`.

#ifndef LDPB_CLI_HPP_
#define LDPB_CLI_HPP_

#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldpb/bounds.hpp"
#include "ldpb/config.hpp"
#include "ldpb/errors.hpp"
#include "ldpb/format.hpp"
#include "ldpb/harness.hpp"
#include "ldpb/mechanism.hpp"
#include "ldpb/output.hpp"

namespace ldpb::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kLdpViolation = 2,
  kDegenerate = 3,
};

// Tolerance on the worst-case ratio against e^eps.
inline constexpr double kRatioTolerance = 1e-9;

namespace detail {

// One optional string flag per config key.
struct ConfigFlags {
  std::optional<std::string> config_path;
  std::map<std::string, std::string> values;

  void Register(CLI::App& app, bool with_config_file) {
    if (with_config_file) {
      app.add_option("--config", config_path, "experiment config file");
    }
    for (auto key : kConfigKeys) {
      const std::string name(key);
      const std::string flag = name.size() == 1 ? "-" + name + ",--" + name
                                                : "--" + name;
      app.add_option_function<std::string>(
          flag, [this, name](const std::string& v) { values[name] = v; },
          "override config key '" + name + "'");
    }
  }

  // Loads the file (if any) then applies flag overrides.
  ExperimentConfig Resolve(bool require_arms) const {
    ExperimentConfig config;
    bool have_arms = false;
    if (config_path) {
      std::ifstream in(*config_path);
      if (!in) throw ConfigError("cannot open config file '" + *config_path + "'");
      config = ParseConfig(in);
      have_arms = true;
    }
    for (const auto& [key, value] : values) {
      SetConfigValue(config, key, value);
      if (key == "arms") have_arms = true;
    }
    if (require_arms && !have_arms) {
      throw ConfigError("no arms given: pass --config or --arms");
    }
    Validate(config);
    return config;
  }
};

inline int RunCommand(const ExperimentConfig& config, const std::string& out_dir,
                      unsigned jobs, std::ostream& out) {
  const AggregateResult result = RunExperiment(config, jobs);
  std::filesystem::create_directories(out_dir);
  const std::string stem = CellStem(config);
  const std::filesystem::path csv_path =
      std::filesystem::path(out_dir) / (stem + ".csv");
  const std::filesystem::path manifest_path =
      std::filesystem::path(out_dir) / (stem + ".manifest.json");
  {
    std::ofstream csv(csv_path, std::ios::binary);
    WriteRegretCsv(result, csv);
    if (!csv) throw ConfigError("cannot write " + csv_path.string());
  }
  {
    std::ofstream manifest(manifest_path, std::ios::binary);
    manifest << Manifest(config, csv_path.filename().string()).dump(2) << '\n';
    if (!manifest) throw ConfigError("cannot write " + manifest_path.string());
  }
  out << "csv: " << csv_path.string() << '\n'
      << "manifest: " << manifest_path.string() << '\n'
      << "final_t: " << result.checkpoints.back() << '\n'
      << "mean_regret: " << FormatDouble(result.final_mean()) << '\n'
      << "std_regret: " << FormatDouble(result.final_stddev()) << '\n';
  return kOk;
}

}  // namespace detail

// Parses `args` (without the program name) and executes the subcommand.
inline int Dispatch(std::vector<std::string> args, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"Locally differentially private bandit simulator", "ldpb"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "simulate an experiment cell");
  detail::ConfigFlags run_flags;
  run_flags.Register(*run, true);
  std::string out_dir = ".";
  unsigned jobs = DefaultJobs();
  run->add_option("--out-dir", out_dir, "directory for CSV and manifest");
  run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate regret upper bounds");
  detail::ConfigFlags bound_flags;
  bound_flags.Register(*bounds, true);
  double gamma = 0.1;
  double c0 = 1.0;
  std::string algorithm;
  std::string csv_path;
  bounds->add_option("--gamma", gamma, "proof parameter in (0, 1)");
  bounds->add_option("--c0", c0, "constant for the O(.) terms");
  bounds->add_option("--algorithm", algorithm,
                     "ts or ucb (default: the config's agent)")
      ->check(CLI::IsMember({"ts", "ucb"}));
  bounds->add_option("--csv", csv_path, "also write the report as CSV");

  // verify-ldp
  auto* verify = app.add_subcommand("verify-ldp", "check the LDP guarantee");
  std::string mech_name = "linear";
  std::string eps_text = "1";
  double b = 0.0;
  std::size_t grid = 1001;
  bool records = false;
  verify->add_option("--mechanism", mech_name)
      ->check(CLI::IsMember({"linear", "quadratic", "exponential"}));
  verify->add_option("--epsilon", eps_text, "positive decimal or inf");
  verify->add_option("-b,--b", b, "quadratic shape parameter");
  verify->add_option("--grid", grid, "grid points on [0, 1]")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  verify->add_flag("--records", records, "print CSV records instead of text");

  // preset
  auto* preset = app.add_subcommand("preset", "emit a preset config");
  std::string preset_name;
  std::string preset_out;
  detail::ConfigFlags preset_flags;
  preset_flags.Register(*preset, false);
  preset->add_option("name", preset_name, "preset name")
      ->required()
      ->check(CLI::IsMember({"fig2"}));
  preset->add_option("--out", preset_out, "output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (*run) {
      return detail::RunCommand(run_flags.Resolve(true), out_dir, jobs, out);
    }
    if (*bounds) {
      const ExperimentConfig config = bound_flags.Resolve(true);
      const Mechanism mech = config.MakeMechanism();
      const BanditEnvironment env = config.Environment();
      const bool ucb = algorithm.empty() ? config.agent == AgentKind::kUcb
                                         : algorithm == "ucb";
      const double horizon = static_cast<double>(config.horizon);
      const BoundReport report =
          ucb ? UcbBound(mech, env, horizon) : TsBound(mech, env, horizon, gamma, c0);
      out << report.ToTable();
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        csv << report.ToCsv();
        if (!csv) throw ConfigError("cannot write " + csv_path);
      }
      return kOk;
    }
    if (*verify) {
      ExperimentConfig probe;
      SetConfigValue(probe, "epsilon", eps_text);
      const auto kind = ParseMechanismKind(mech_name);
      const Mechanism mech =
          Mechanism::Make(*kind, PrivacyBudget::Of(probe.epsilon), b);
      const ConditionReport report = VerifyLdpConditions(mech, grid);
      bool ok = report.all_passed();
      out << (records ? report.ToRecords() : report.ToText());
      if (mech.budget().is_infinite()) {
        out << "worst_case_ratio: unbounded (non-private baseline)\n";
      } else {
        const double ratio = WorstCaseRatio(mech, grid);
        const double limit = mech.budget().exp();
        const bool ratio_ok = ratio <= limit + kRatioTolerance;
        ok = ok && ratio_ok;
        out << "worst_case_ratio: " << FormatDouble(ratio)
            << "  e^eps: " << FormatDouble(limit) << "  "
            << (ratio_ok ? "PASS" : "FAIL") << '\n';
      }
      return ok ? kOk : kLdpViolation;
    }
    if (*preset) {
      ExperimentConfig config = Fig2Preset();
      for (const auto& [key, value] : preset_flags.values) {
        SetConfigValue(config, key, value);
      }
      Validate(config);
      const std::string text = SerializeConfig(config);
      if (preset_out.empty()) {
        out << text;
      } else {
        std::ofstream file(preset_out, std::ios::binary);
        file << text;
        if (!file) throw ConfigError("cannot write " + preset_out);
        out << "config: " << preset_out << '\n';
      }
      return kOk;
    }
  } catch (const DegenerateEnvironmentError& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

inline int Dispatch(int argc, char** argv, std::ostream& out,
                    std::ostream& err) {
  return Dispatch(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace ldpb::cli

#endif  // LDPB_CLI_HPP_
