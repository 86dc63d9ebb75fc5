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

// Deterministic experiment runner.
//
// Each round the agent picks an arm, the environment draws a raw reward from
// that arm, the mechanism turns it into one bit, and the agent is updated on
// the bit alone. Regret is pseudo-regret: the sum of true gaps of the chosen
// arms, so realized rewards never enter it.
//
// Random streams: trial k of an experiment with base seed s uses three
// independent mt19937_64 engines seeded with DeriveSeed(s, k, role) for the
// environment, mechanism and agent roles. Every round consumes one agent
// selection (N Beta variates for Thompson sampling, none for UCB), one
// reward sample and one uniform for the perturbation.

#ifndef LDPB_HARNESS_HPP_
#define LDPB_HARNESS_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ldpb/agents.hpp"
#include "ldpb/config.hpp"
#include "ldpb/distributions.hpp"
#include "ldpb/mechanism.hpp"
#include "ldpb/random.hpp"

namespace ldpb {

struct RegretTrace {
  std::uint64_t trial_index = 0;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> checkpoints;
  std::vector<double> cumulative_regret;  // one entry per checkpoint

  friend bool operator==(const RegretTrace&, const RegretTrace&) = default;
};

struct AggregateResult {
  std::vector<std::uint64_t> checkpoints;
  std::vector<double> mean;
  std::vector<double> stddev;  // sample standard deviation, 0 for one trial
  std::size_t trials = 0;
  std::vector<RegretTrace> traces;  // indexed by trial

  double final_mean() const { return mean.back(); }
  double final_stddev() const { return stddev.back(); }

  friend bool operator==(const AggregateResult&, const AggregateResult&) =
      default;
};

// One round as seen by an observer of RunTrial.
struct RoundEvent {
  std::uint64_t t = 0;  // 1-based round number
  ArmChoice arm;
  double reward = 0.0;
  PrivatizedReward bit{false};
};

// Validated, expanded form of a config shared by all trials.
class Simulation {
 public:
  explicit Simulation(const ExperimentConfig& config)
      : config_((Validate(config), config)),
        environment_(config.Environment()),
        mechanism_(config.MakeMechanism()),
        checkpoints_(config.CheckpointTimes()),
        gaps_(environment_.gaps()) {}

  const ExperimentConfig& config() const { return config_; }
  const BanditEnvironment& environment() const { return environment_; }
  const Mechanism& mechanism() const { return mechanism_; }
  const std::vector<std::uint64_t>& checkpoints() const { return checkpoints_; }

  // Runs trial `trial_index`, calling observer(const RoundEvent&) each round.
  template <class Observer>
  RegretTrace RunTrial(std::uint64_t trial_index, Observer&& observer) const {
    const std::uint64_t seed = config_.seed;
    Rng env_rng = MakeStream(seed, trial_index, StreamRole::kEnvironment);
    Rng mech_rng = MakeStream(seed, trial_index, StreamRole::kMechanism);
    Rng agent_rng = MakeStream(seed, trial_index, StreamRole::kAgent);

    Agent agent(config_.agent, environment_.size());
    RegretTrace trace;
    trace.trial_index = trial_index;
    trace.base_seed = seed;
    trace.checkpoints = checkpoints_;
    trace.cumulative_regret.reserve(checkpoints_.size());

    double regret = 0.0;
    std::size_t next = 0;
    for (std::uint64_t t = 1; t <= config_.horizon; ++t) {
      const ArmChoice arm = agent.Select(agent_rng);
      const double reward = Sample(environment_.arm(arm.index), env_rng);
      const PrivatizedReward bit = Perturb(mechanism_, reward, mech_rng);
      agent.Update(arm, bit);
      regret += gaps_[arm.index];
      observer(RoundEvent{t, arm, reward, bit});
      if (next < checkpoints_.size() && checkpoints_[next] == t) {
        trace.cumulative_regret.push_back(regret);
        ++next;
      }
    }
    return trace;
  }

  RegretTrace RunTrial(std::uint64_t trial_index) const {
    return RunTrial(trial_index, [](const RoundEvent&) {});
  }

 private:
  ExperimentConfig config_;
  BanditEnvironment environment_;
  Mechanism mechanism_;
  std::vector<std::uint64_t> checkpoints_;
  std::vector<double> gaps_;
};

inline RegretTrace RunTrial(const ExperimentConfig& config,
                            std::uint64_t trial_index) {
  return Simulation(config).RunTrial(trial_index);
}

// Mean and sample standard deviation per checkpoint, reduced in trial order.
inline AggregateResult Aggregate(std::vector<RegretTrace> traces) {
  if (traces.empty()) throw DomainError("nothing to aggregate");
  AggregateResult result;
  result.checkpoints = traces.front().checkpoints;
  result.trials = traces.size();
  const std::size_t m = result.checkpoints.size();
  const double n = static_cast<double>(traces.size());
  result.mean.assign(m, 0.0);
  result.stddev.assign(m, 0.0);
  for (const auto& tr : traces) {
    for (std::size_t j = 0; j < m; ++j) result.mean[j] += tr.cumulative_regret[j];
  }
  for (auto& v : result.mean) v /= n;
  if (traces.size() > 1) {
    for (const auto& tr : traces) {
      for (std::size_t j = 0; j < m; ++j) {
        const double d = tr.cumulative_regret[j] - result.mean[j];
        result.stddev[j] += d * d;
      }
    }
    for (auto& v : result.stddev) v = std::sqrt(v / (n - 1.0));
  }
  result.traces = std::move(traces);
  return result;
}

inline unsigned DefaultJobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs every trial on up to `jobs` threads. Results do not depend on `jobs`.
inline AggregateResult RunExperiment(const ExperimentConfig& config,
                                     unsigned jobs = DefaultJobs()) {
  const Simulation sim(config);
  const std::size_t trials = config.trials;
  std::vector<RegretTrace> traces(trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= trials) return;
      try {
        traces[k] = sim.RunTrial(k);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(trials);
        return;
      }
    }
  };

  const std::size_t threads =
      std::min<std::size_t>(std::max(1u, jobs), trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return Aggregate(std::move(traces));
}

}  // namespace ldpb

#endif  // LDPB_HARNESS_HPP_
