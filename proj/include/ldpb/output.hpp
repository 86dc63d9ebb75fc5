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

// On-disk results of an experiment cell.
//
// CSV (long format), header "checkpoint_t,trial,cumulative_regret": one row
// per (trial, checkpoint) with the trial index in the second column, then the
// "mean" rows and the "std" rows. Numbers use the shortest round-trip decimal
// form, so identical runs produce identical bytes.
//
// Manifest (JSON): the effective config both as text and as fields, its
// FNV-1a 64-bit hash, the base seed, the RNG scheme and the CSV file name.

#ifndef LDPB_OUTPUT_HPP_
#define LDPB_OUTPUT_HPP_

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ldpb/config.hpp"
#include "ldpb/format.hpp"
#include "ldpb/harness.hpp"

namespace ldpb {

inline constexpr std::string_view kRngScheme =
    "mt19937_64 per stream; stream seed = splitmix64 chain over (base seed, "
    "trial index, role) with roles environment=1, mechanism=2, agent=3";

inline std::uint64_t Fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string ConfigHash(const ExperimentConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(SerializeConfig(config))));
  return buf;
}

// "<agent>_<mechanism>_eps<epsilon>", plus "_b<b>" for quadratic.
inline std::string CellStem(const ExperimentConfig& config) {
  std::string stem = std::string(ToString(config.agent)) + "_" +
                     std::string(ToString(config.mechanism)) + "_eps" +
                     FormatDouble(config.epsilon);
  if (config.mechanism == MechanismKind::kQuadratic) {
    stem += "_b" + FormatDouble(config.b);
  }
  return stem;
}

inline void WriteRegretCsv(const AggregateResult& result, std::ostream& out) {
  out << "checkpoint_t,trial,cumulative_regret\n";
  for (std::size_t k = 0; k < result.traces.size(); ++k) {
    const auto& tr = result.traces[k];
    for (std::size_t j = 0; j < tr.checkpoints.size(); ++j) {
      out << tr.checkpoints[j] << ',' << k << ','
          << FormatDouble(tr.cumulative_regret[j]) << '\n';
    }
  }
  for (std::size_t j = 0; j < result.checkpoints.size(); ++j) {
    out << result.checkpoints[j] << ",mean," << FormatDouble(result.mean[j])
        << '\n';
  }
  for (std::size_t j = 0; j < result.checkpoints.size(); ++j) {
    out << result.checkpoints[j] << ",std," << FormatDouble(result.stddev[j])
        << '\n';
  }
}

inline std::string RegretCsv(const AggregateResult& result) {
  std::ostringstream out;
  WriteRegretCsv(result, out);
  return out.str();
}

inline nlohmann::ordered_json Manifest(const ExperimentConfig& config,
                                       const std::string& csv_file) {
  nlohmann::ordered_json m;
  m["config_hash"] = ConfigHash(config);
  m["seed"] = config.seed;
  m["rng"] = kRngScheme;
  m["csv"] = csv_file;
  nlohmann::ordered_json fields;
  fields["mechanism"] = ToString(config.mechanism);
  fields["epsilon"] = FormatDouble(config.epsilon);
  fields["b"] = FormatDouble(config.b);
  fields["agent"] = ToString(config.agent);
  fields["horizon"] = config.horizon;
  fields["trials"] = config.trials;
  fields["seed"] = config.seed;
  fields["checkpoints"] = FormatCheckpoints(config.checkpoints);
  fields["arms"] = FormatArms(config.arms);
  m["config"] = fields;
  m["config_text"] = SerializeConfig(config);
  return m;
}

}  // namespace ldpb

#endif  // LDPB_OUTPUT_HPP_
