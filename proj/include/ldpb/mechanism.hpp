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

// Bernoulli response mechanisms for epsilon-LDP bandit feedback.
//
// A mechanism maps a bounded reward r in [0, 1] to a single bit that is 1
// with probability p(r). Three response-probability families are provided:
//
//   linear       p(r) = ((e^eps - 1) r + 1) / (e^eps + 1)
//   quadratic    p(r) = ((e^eps - 1 - b) r^2 + b r + 1) / (e^eps + 1),
//                b in [0, 2(e^eps - 1)]
//   exponential  p(r) = e^(eps r) / (e^eps + 1)
//
// An infinite budget denotes the non-private baseline, where every family
// degenerates to p(r) = r.

#ifndef LDPB_MECHANISM_HPP_
#define LDPB_MECHANISM_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ldpb/errors.hpp"
#include "ldpb/random.hpp"

namespace ldpb {

class PrivacyBudget {
 public:
  // Throws DomainError unless epsilon > 0 (NaN rejected, +inf accepted).
  static PrivacyBudget Of(double epsilon) {
    if (!(epsilon > 0.0)) {
      throw DomainError("epsilon must be positive, got " +
                        std::to_string(epsilon));
    }
    return PrivacyBudget(epsilon);
  }
  static PrivacyBudget Infinite() {
    return PrivacyBudget(std::numeric_limits<double>::infinity());
  }

  double epsilon() const { return epsilon_; }
  bool is_infinite() const { return std::isinf(epsilon_); }

  // e^eps and e^eps - 1. Every formula goes through these two so that
  // algebraically equal expressions are also bitwise equal.
  double exp() const { return std::exp(epsilon_); }
  double expm1() const { return std::expm1(epsilon_); }

  friend bool operator==(const PrivacyBudget&, const PrivacyBudget&) = default;

 private:
  explicit PrivacyBudget(double epsilon) : epsilon_(epsilon) {}
  double epsilon_;
};

enum class MechanismKind { kLinear, kQuadratic, kExponential };

inline std::string_view ToString(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kLinear:
      return "linear";
    case MechanismKind::kQuadratic:
      return "quadratic";
    case MechanismKind::kExponential:
      return "exponential";
  }
  return "unknown";
}

inline std::optional<MechanismKind> ParseMechanismKind(std::string_view s) {
  if (s == "linear") return MechanismKind::kLinear;
  if (s == "quadratic") return MechanismKind::kQuadratic;
  if (s == "exponential") return MechanismKind::kExponential;
  return std::nullopt;
}

// Immutable after construction.
class Mechanism {
 public:
  static Mechanism Linear(PrivacyBudget budget) {
    return Mechanism(MechanismKind::kLinear, budget, 0.0);
  }
  static Mechanism Exponential(PrivacyBudget budget) {
    return Mechanism(MechanismKind::kExponential, budget, 0.0);
  }
  // Throws DomainError unless 0 <= b <= 2(e^eps - 1), with a relative slack
  // of 1e-13 at the upper end for libm rounding differences.
  static Mechanism Quadratic(PrivacyBudget budget, double b) {
    if (!(b >= 0.0) || b > MaxQuadraticB(budget) * (1.0 + 1e-13)) {
      std::ostringstream msg;
      msg << "quadratic b must lie in [0, 2(e^eps - 1)] = [0, "
          << MaxQuadraticB(budget) << "], got " << b;
      throw DomainError(msg.str());
    }
    return Mechanism(MechanismKind::kQuadratic, budget, b);
  }
  // b is ignored for kinds other than kQuadratic.
  static Mechanism Make(MechanismKind kind, PrivacyBudget budget,
                        double b = 0.0) {
    switch (kind) {
      case MechanismKind::kLinear:
        return Linear(budget);
      case MechanismKind::kQuadratic:
        return Quadratic(budget, b);
      case MechanismKind::kExponential:
        break;
    }
    return Exponential(budget);
  }

  static double MaxQuadraticB(PrivacyBudget budget) {
    return 2.0 * budget.expm1();
  }

  MechanismKind kind() const { return kind_; }
  PrivacyBudget budget() const { return budget_; }
  double epsilon() const { return budget_.epsilon(); }
  double b() const { return b_; }

 private:
  Mechanism(MechanismKind kind, PrivacyBudget budget, double b)
      : kind_(kind), budget_(budget), b_(b) {}

  MechanismKind kind_;
  PrivacyBudget budget_;
  double b_;
};

// The only feedback agents accept. Not constructible from a raw reward.
class PrivatizedReward {
 public:
  explicit constexpr PrivatizedReward(bool bit) : bit_(bit) {}
  constexpr bool bit() const { return bit_; }
  constexpr int value() const { return bit_ ? 1 : 0; }
  friend constexpr bool operator==(PrivatizedReward, PrivatizedReward) =
      default;

 private:
  bool bit_;
};

inline void CheckReward(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("reward must lie in [0, 1], got " + std::to_string(r));
  }
}

// p(r), the probability that the mechanism reports 1 for reward r.
inline double ResponseProbability(const Mechanism& mech, double r) {
  CheckReward(r);
  const PrivacyBudget budget = mech.budget();
  if (budget.is_infinite()) return r;
  const double c = budget.expm1();
  const double denom = budget.exp() + 1.0;
  switch (mech.kind()) {
    case MechanismKind::kLinear:
      return (c * r + 1.0) / denom;
    case MechanismKind::kQuadratic:
      return ((c - mech.b()) * r * r + mech.b() * r + 1.0) / denom;
    case MechanismKind::kExponential:
      return std::exp(budget.epsilon() * r) / denom;
  }
  return 0.0;
}

// Reports 1 with probability p(r). Consumes exactly one engine output.
inline PrivatizedReward Perturb(const Mechanism& mech, double r, Rng& rng) {
  const double p = ResponseProbability(mech, r);
  return PrivatizedReward(UniformDouble(rng) < p);
}

// Uniform grid over [0, 1] with `points` nodes; a single node sits at 0.
inline std::vector<double> UnitGrid(std::size_t points) {
  if (points == 0) throw DomainError("grid needs at least one point");
  std::vector<double> grid(points, 0.0);
  for (std::size_t k = 1; k < points; ++k) {
    grid[k] = static_cast<double>(k) / static_cast<double>(points - 1);
  }
  if (points > 1) grid.back() = 1.0;
  return grid;
}

struct ConditionResult {
  std::string name;
  bool passed = false;
  // Grid point at which the condition is violated, if any.
  std::optional<double> witness_r;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ConditionReport {
  std::vector<ConditionResult> conditions;

  bool all_passed() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionResult& c) { return c.passed; });
  }

  // One condition per line: "<name>: PASS|FAIL  lhs=.. rhs=.. [witness r=..]".
  std::string ToText() const {
    std::ostringstream out;
    out.precision(17);
    for (const auto& c : conditions) {
      out << c.name << ": " << (c.passed ? "PASS" : "FAIL") << "  lhs=" << c.lhs
          << " rhs=" << c.rhs;
      if (c.witness_r) out << " witness_r=" << *c.witness_r;
      out << '\n';
    }
    return out.str();
  }

  // CSV records with header "condition,passed,witness_r,lhs,rhs"; an empty
  // witness field means the condition holds everywhere on the grid.
  std::string ToRecords() const {
    std::ostringstream out;
    out.precision(17);
    out << "condition,passed,witness_r,lhs,rhs\n";
    for (const auto& c : conditions) {
      out << c.name << ',' << (c.passed ? 1 : 0) << ',';
      if (c.witness_r) out << *c.witness_r;
      out << ',' << c.lhs << ',' << c.rhs << '\n';
    }
    return out.str();
  }
};

// Absolute slack for the sufficient-condition comparisons.
inline constexpr double kConditionTolerance = 1e-12;

// Checks the three sufficient conditions for epsilon-LDP on a uniform grid:
// p(0) >= 1/(e^eps + 1), p(1) <= e^eps/(e^eps + 1), p non-decreasing.
inline ConditionReport VerifyLdpConditions(const Mechanism& mech,
                                           std::size_t grid_points = 1001) {
  if (grid_points < 2) throw DomainError("grid_points must be >= 2");
  const PrivacyBudget budget = mech.budget();
  const double lower = budget.is_infinite() ? 0.0 : 1.0 / (budget.exp() + 1.0);
  const double upper =
      budget.is_infinite() ? 1.0 : budget.exp() / (budget.exp() + 1.0);

  ConditionReport report;
  const double p0 = ResponseProbability(mech, 0.0);
  const double p1 = ResponseProbability(mech, 1.0);

  ConditionResult lower_bound{"p(0) >= 1/(e^eps+1)",
                              p0 >= lower - kConditionTolerance,
                              std::nullopt, p0, lower};
  if (!lower_bound.passed) lower_bound.witness_r = 0.0;
  ConditionResult upper_bound{"p(1) <= e^eps/(e^eps+1)",
                              p1 <= upper + kConditionTolerance, std::nullopt,
                              p1, upper};
  if (!upper_bound.passed) upper_bound.witness_r = 1.0;

  // lhs/rhs hold the first decreasing pair, or the smallest step seen.
  ConditionResult monotone{"p non-decreasing", true, std::nullopt, 0.0, 0.0};
  const std::vector<double> grid = UnitGrid(grid_points);
  double prev = ResponseProbability(mech, grid.front());
  double min_step = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double cur = ResponseProbability(mech, grid[k]);
    if (cur < prev - kConditionTolerance) {
      monotone.passed = false;
      monotone.witness_r = grid[k];
      monotone.lhs = cur;
      monotone.rhs = prev;
      break;
    }
    min_step = std::min(min_step, cur - prev);
    prev = cur;
  }
  if (monotone.passed) monotone.lhs = min_step;

  report.conditions = {lower_bound, upper_bound, monotone};
  return report;
}

// max over y in {0, 1} and grid pairs (r, r') of Pr(Y=y|r) / Pr(Y=y|r').
// For each y the maximum pairs the largest and smallest probability on the
// grid, so one pass suffices.
inline double WorstCaseRatio(const Mechanism& mech,
                             std::size_t grid_points = 1001) {
  if (mech.budget().is_infinite()) {
    throw DomainError("worst-case ratio is unbounded for an infinite budget");
  }
  double p_min = std::numeric_limits<double>::infinity();
  double p_max = -p_min;
  for (double r : UnitGrid(grid_points)) {
    const double p = ResponseProbability(mech, r);
    p_min = std::min(p_min, p);
    p_max = std::max(p_max, p);
  }
  const double ratio_one = p_max / p_min;
  const double ratio_zero = (1.0 - p_min) / (1.0 - p_max);
  return std::max(ratio_one, ratio_zero);
}

}  // namespace ldpb

#endif  // LDPB_MECHANISM_HPP_
