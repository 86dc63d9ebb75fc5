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

// Bandit policies that learn from privatized one-bit feedback only.
//
// Thompson sampling keeps a Beta(S_i + 1, F_i + 1) posterior per arm over the
// arm's privatized success probability. The UCB policy plays the argmax of
// s_i / n_i + sqrt(2 ln t / n_i) over privatized empirical means. Neither
// policy depends on the horizon.

#ifndef LDPB_AGENTS_HPP_
#define LDPB_AGENTS_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ldpb/errors.hpp"
#include "ldpb/mechanism.hpp"
#include "ldpb/random.hpp"

namespace ldpb {

struct ArmChoice {
  std::size_t index = 0;
  friend bool operator==(ArmChoice, ArmChoice) = default;
};

struct TsState {
  explicit TsState(std::size_t num_arms)
      : successes(num_arms, 0), failures(num_arms, 0) {
    if (num_arms == 0) throw DomainError("agent needs at least one arm");
  }

  std::size_t num_arms() const { return successes.size(); }
  std::uint64_t rounds() const {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < num_arms(); ++i) {
      total += successes[i] + failures[i];
    }
    return total;
  }

  std::vector<std::uint64_t> successes;
  std::vector<std::uint64_t> failures;
};

// Draws theta_i ~ Beta(S_i + 1, F_i + 1) for i = 0..N-1 in order and returns
// the argmax. Exact ties are broken uniformly with one extra draw.
inline ArmChoice TsSelect(const TsState& state, Rng& rng) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  std::size_t ties = 0;
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < state.num_arms(); ++i) {
    const double theta =
        Beta(static_cast<double>(state.successes[i]) + 1.0,
             static_cast<double>(state.failures[i]) + 1.0, rng);
    if (theta > best) {
      best = theta;
      best_index = i;
      ties = 1;
      tied.clear();
    } else if (theta == best) {
      if (ties == 1) tied.push_back(best_index);
      tied.push_back(i);
      ++ties;
    }
  }
  if (ties > 1) {
    return ArmChoice{tied[UniformIndex(tied.size(), rng)]};
  }
  return ArmChoice{best_index};
}

inline void TsUpdate(TsState& state, ArmChoice arm, PrivatizedReward y) {
  if (arm.index >= state.num_arms()) throw DomainError("arm index out of range");
  if (y.bit()) {
    ++state.successes[arm.index];
  } else {
    ++state.failures[arm.index];
  }
}

struct UcbState {
  explicit UcbState(std::size_t num_arms)
      : pulls(num_arms, 0), successes(num_arms, 0) {
    if (num_arms == 0) throw DomainError("agent needs at least one arm");
  }

  std::size_t num_arms() const { return pulls.size(); }

  std::vector<std::uint64_t> pulls;
  std::vector<std::uint64_t> successes;
  // Completed rounds.
  std::uint64_t t = 0;
};

// s / n + sqrt(2 ln t / n), n >= 1.
inline double UcbIndex(std::uint64_t successes, std::uint64_t pulls,
                       std::uint64_t t) {
  const double n = static_cast<double>(pulls);
  return static_cast<double>(successes) / n +
         std::sqrt(2.0 * std::log(static_cast<double>(t)) / n);
}

// Unplayed arms first in index order, then the largest index; ties go to the
// lowest arm.
inline ArmChoice UcbSelect(const UcbState& state) {
  for (std::size_t i = 0; i < state.num_arms(); ++i) {
    if (state.pulls[i] == 0) return ArmChoice{i};
  }
  std::size_t best_index = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < state.num_arms(); ++i) {
    const double index = UcbIndex(state.successes[i], state.pulls[i], state.t);
    if (index > best) {
      best = index;
      best_index = i;
    }
  }
  return ArmChoice{best_index};
}

inline void UcbUpdate(UcbState& state, ArmChoice arm, PrivatizedReward y) {
  if (arm.index >= state.num_arms()) throw DomainError("arm index out of range");
  ++state.pulls[arm.index];
  if (y.bit()) ++state.successes[arm.index];
  ++state.t;
}

enum class AgentKind { kThompson, kUcb };

inline std::string_view ToString(AgentKind kind) {
  return kind == AgentKind::kThompson ? "ts" : "ucb";
}

inline std::optional<AgentKind> ParseAgentKind(std::string_view s) {
  if (s == "ts") return AgentKind::kThompson;
  if (s == "ucb") return AgentKind::kUcb;
  return std::nullopt;
}

// Runtime-selected policy. Select may draw from `rng` (Thompson sampling);
// Update only ever sees the privatized bit.
class Agent {
 public:
  Agent(AgentKind kind, std::size_t num_arms)
      : state_(kind == AgentKind::kThompson
                   ? State(TsState(num_arms))
                   : State(UcbState(num_arms))) {}

  AgentKind kind() const {
    return std::holds_alternative<TsState>(state_) ? AgentKind::kThompson
                                                   : AgentKind::kUcb;
  }

  ArmChoice Select(Rng& rng) const {
    if (const auto* ts = std::get_if<TsState>(&state_)) {
      return TsSelect(*ts, rng);
    }
    return UcbSelect(std::get<UcbState>(state_));
  }

  void Update(ArmChoice arm, PrivatizedReward y) {
    if (auto* ts = std::get_if<TsState>(&state_)) {
      TsUpdate(*ts, arm, y);
    } else {
      UcbUpdate(std::get<UcbState>(state_), arm, y);
    }
  }

  const TsState* ts_state() const { return std::get_if<TsState>(&state_); }
  const UcbState* ucb_state() const { return std::get_if<UcbState>(&state_); }

 private:
  using State = std::variant<TsState, UcbState>;
  State state_;
};

}  // namespace ldpb

#endif  // LDPB_AGENTS_HPP_
