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

// Privatized means, privatized gaps, and problem-dependent cumulative regret
// upper bounds for Thompson sampling and UCB on privatized feedback.
//
// Privatized mean of an arm with reward law R (mean mu, variance sigma^2):
//   linear       (1 + mu (e^eps - 1)) / (e^eps + 1)
//   quadratic    ((mu^2 + sigma^2)(e^eps - 1 - b) + b mu + 1) / (e^eps + 1)
//   exponential  E[e^(eps R)] / (e^eps + 1)
//
// Thompson sampling bounds at horizon T, with proof parameter gamma in (0, 1):
//   linear form  (1+gamma)^2 ((e^eps+1)/(e^eps-1))^2
//                  [sum_i log T / (2 Delta_i) + c0 N / (2 Delta_min)]
//   gap form     (1+gamma)^2 sum_i (log T + 1) / (2 Delta_i,eps^2) Delta_i
//                  + c0 N
// UCB bound:     sum_i [8 log T / Delta_i,eps^2 + 1 + pi^2/3] Delta_i
//
// Sums run over the arms with Delta_i > 0. The constant c0 stands in for the
// unspecified O(.) constants and is reported separately from the logarithmic
// part.

#ifndef LDPB_BOUNDS_HPP_
#define LDPB_BOUNDS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ldpb/distributions.hpp"
#include "ldpb/errors.hpp"
#include "ldpb/format.hpp"
#include "ldpb/mechanism.hpp"

namespace ldpb {

// mu_eps = E[p(R)], the success probability of the privatized bit.
// Not defined for the infinite budget; use Mean(dist) for the baseline.
inline double PrivatizedMean(const Mechanism& mech, const ArmDistribution& dist) {
  const PrivacyBudget budget = mech.budget();
  if (budget.is_infinite()) {
    throw DomainError("privatized mean needs a finite epsilon");
  }
  const double c = budget.expm1();
  const double denom = budget.exp() + 1.0;
  const double mu = Mean(dist);
  switch (mech.kind()) {
    case MechanismKind::kLinear:
      return (1.0 + mu * c) / denom;
    case MechanismKind::kQuadratic: {
      const double second_moment = mu * mu + Variance(dist);
      return (second_moment * (c - mech.b()) + mech.b() * mu + 1.0) / denom;
    }
    case MechanismKind::kExponential:
      return Mgf(dist, budget.epsilon()) / denom;
  }
  return 0.0;
}

struct GapReport {
  std::vector<double> true_gaps;          // Delta_i = mu_1 - mu_i
  std::vector<double> privatized_means;   // mu_i,eps
  std::vector<double> privatized_gaps;    // Delta_i,eps = mu*_eps - mu_i,eps
  // mu_1,eps - mu_i,eps against the true optimal arm. Negative entries mean
  // the mechanism reorders that arm above the true optimum.
  std::vector<double> gaps_to_true_optimal;
  double optimal_privatized_mean = 0.0;   // mu*_eps = max_i mu_i,eps
  std::size_t optimal_arm = 0;
  std::size_t privatized_optimal_arm = 0;

  // True when every suboptimal arm keeps a strictly positive privatized gap,
  // i.e. the privatized ordering has the same unique top arm.
  bool preserves_optimum() const {
    for (std::size_t i = 0; i < true_gaps.size(); ++i) {
      if (i != optimal_arm && !(privatized_gaps[i] > 0.0)) return false;
    }
    return privatized_optimal_arm == optimal_arm;
  }
};

// Privatized gaps of every arm. An infinite budget leaves the means unchanged.
// Throws DegenerateEnvironmentError when Delta_min = 0.
inline GapReport PrivatizedGap(const Mechanism& mech,
                               const BanditEnvironment& env) {
  if (env.is_degenerate()) {
    throw DegenerateEnvironmentError(
        "minimum gap is zero: problem-dependent bounds need a unique optimal "
        "arm and at least two arms");
  }
  GapReport report;
  report.optimal_arm = env.optimal_arm();
  report.true_gaps = env.gaps();
  report.privatized_means.reserve(env.size());
  for (const auto& arm : env.arms()) {
    report.privatized_means.push_back(mech.budget().is_infinite()
                                          ? Mean(arm)
                                          : PrivatizedMean(mech, arm));
  }
  const auto top = std::max_element(report.privatized_means.begin(),
                                    report.privatized_means.end());
  report.optimal_privatized_mean = *top;
  report.privatized_optimal_arm =
      static_cast<std::size_t>(top - report.privatized_means.begin());
  const double mu1_eps = report.privatized_means[report.optimal_arm];
  for (double m : report.privatized_means) {
    report.privatized_gaps.push_back(report.optimal_privatized_mean - m);
    report.gaps_to_true_optimal.push_back(mu1_eps - m);
  }
  return report;
}

// Closed-form quadratic gap mu_1,eps - mu_i,eps written in terms of the true
// means and variances of the optimal arm and arm i.
inline double QuadraticGapClosedForm(const Mechanism& mech,
                                     const BanditEnvironment& env,
                                     std::size_t i) {
  if (mech.kind() != MechanismKind::kQuadratic || mech.budget().is_infinite()) {
    throw DomainError("quadratic gap form needs a finite quadratic mechanism");
  }
  const double k = mech.budget().expm1() - mech.b();
  const double mu1 = env.optimal_mean();
  const double mui = env.means().at(i);
  const double var1 = Variance(env.arm(env.optimal_arm()));
  const double vari = Variance(env.arm(i));
  return ((k * (mu1 + mui) + mech.b()) * (mu1 - mui) + k * (var1 - vari)) /
         (mech.budget().exp() + 1.0);
}

// Closed-form exponential gap
//   [e^(eps mu_i)(e^(eps Delta_i) - 1) + tau_1(eps) - tau_i(eps)] / (e^eps + 1)
// where tau is the Jensen gap of each arm.
inline double ExponentialGapClosedForm(double epsilon,
                                       const BanditEnvironment& env,
                                       std::size_t i) {
  const double mui = env.means().at(i);
  const double delta = env.gap(i);
  const double tau1 = JensenGap(env.arm(env.optimal_arm()), epsilon);
  const double taui = JensenGap(env.arm(i), epsilon);
  return (std::exp(epsilon * mui) * std::expm1(epsilon * delta) + tau1 - taui) /
         (std::exp(epsilon) + 1.0);
}

enum class BoundAlgorithm { kThompson, kUcb };

// Which Thompson sampling statement to evaluate.
enum class TsBoundForm {
  kByMechanism,  // linear form for the linear mechanism, gap form otherwise
  kLinear,       // requires the linear mechanism
  kGap,          // any mechanism
};

struct BoundTerm {
  std::size_t arm = 0;
  double gap = 0.0;
  double privatized_gap = 0.0;
  double term = 0.0;
};

struct BoundReport {
  BoundAlgorithm algorithm = BoundAlgorithm::kThompson;
  MechanismKind mechanism = MechanismKind::kLinear;
  // "linear", "gap" or "ucb".
  std::string form;
  double epsilon = 0.0;
  double horizon = 0.0;
  double gamma = 0.0;  // zero for UCB
  double c0 = 0.0;     // zero for UCB
  std::vector<BoundTerm> terms;
  double leading_total = 0.0;  // sum of per-arm terms
  double constant_term = 0.0;
  double total = 0.0;          // leading_total + constant_term
  // Human-readable description of how constant_term was formed.
  std::string constant_policy;

  std::string ToTable() const;
  std::string ToCsv() const;
};

namespace detail {

inline void CheckHorizon(double horizon) {
  if (!(horizon >= 1.0) || std::isinf(horizon)) {
    throw DomainError("horizon T must be a finite value >= 1");
  }
}

inline void CheckPrivatizedGaps(const GapReport& gaps) {
  if (!gaps.preserves_optimum()) {
    throw DegenerateEnvironmentError(
        "mechanism does not preserve a unique optimal arm: some suboptimal "
        "arm has a non-positive privatized gap");
  }
}

}  // namespace detail

inline BoundReport TsBound(const Mechanism& mech, const BanditEnvironment& env,
                           double horizon, double gamma, double c0 = 1.0,
                           TsBoundForm form = TsBoundForm::kByMechanism) {
  detail::CheckHorizon(horizon);
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("gamma must lie in (0, 1)");
  }
  if (!(c0 >= 0.0) || std::isinf(c0)) {
    throw DomainError("c0 must be finite and non-negative");
  }
  if (form == TsBoundForm::kByMechanism) {
    form = mech.kind() == MechanismKind::kLinear ? TsBoundForm::kLinear
                                                 : TsBoundForm::kGap;
  }
  if (form == TsBoundForm::kLinear && mech.kind() != MechanismKind::kLinear) {
    throw DomainError("the linear bound form applies to the linear mechanism");
  }

  const GapReport gaps = PrivatizedGap(mech, env);
  detail::CheckPrivatizedGaps(gaps);

  BoundReport report;
  report.algorithm = BoundAlgorithm::kThompson;
  report.mechanism = mech.kind();
  report.epsilon = mech.epsilon();
  report.horizon = horizon;
  report.gamma = gamma;
  report.c0 = c0;

  const double log_t = std::log(horizon);
  const double inflation = (1.0 + gamma) * (1.0 + gamma);
  const double n = static_cast<double>(env.size());

  if (form == TsBoundForm::kLinear) {
    report.form = "linear";
    double privacy = 1.0;
    if (!mech.budget().is_infinite()) {
      const double ratio = (mech.budget().exp() + 1.0) / mech.budget().expm1();
      privacy = ratio * ratio;
    }
    const double scale = inflation * privacy;
    for (std::size_t i = 0; i < env.size(); ++i) {
      if (i == env.optimal_arm()) continue;
      const double delta = gaps.true_gaps[i];
      report.terms.push_back(
          {i, delta, gaps.privatized_gaps[i], scale * log_t / (2.0 * delta)});
    }
    report.constant_term = scale * c0 * n / (2.0 * env.min_gap());
    report.constant_policy =
        "c0 * N / (2 Delta_min) scaled by (1+gamma)^2 ((e^eps+1)/(e^eps-1))^2";
  } else {
    report.form = "gap";
    for (std::size_t i = 0; i < env.size(); ++i) {
      if (i == env.optimal_arm()) continue;
      const double delta = gaps.true_gaps[i];
      const double pgap = gaps.privatized_gaps[i];
      report.terms.push_back(
          {i, delta, pgap, inflation * (log_t + 1.0) / (2.0 * pgap * pgap) * delta});
    }
    report.constant_term = c0 * n;
    report.constant_policy = "c0 * N";
  }
  for (const auto& t : report.terms) report.leading_total += t.term;
  report.total = report.leading_total + report.constant_term;
  return report;
}

inline BoundReport UcbBound(const Mechanism& mech, const BanditEnvironment& env,
                            double horizon) {
  detail::CheckHorizon(horizon);
  const GapReport gaps = PrivatizedGap(mech, env);
  detail::CheckPrivatizedGaps(gaps);

  BoundReport report;
  report.algorithm = BoundAlgorithm::kUcb;
  report.mechanism = mech.kind();
  report.form = "ucb";
  report.epsilon = mech.epsilon();
  report.horizon = horizon;
  report.constant_policy = "none (bound is fully explicit)";

  const double log_t = std::log(horizon);
  const double extra = 1.0 + std::numbers::pi * std::numbers::pi / 3.0;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (i == env.optimal_arm()) continue;
    const double delta = gaps.true_gaps[i];
    const double pgap = gaps.privatized_gaps[i];
    report.terms.push_back(
        {i, delta, pgap, (8.0 * log_t / (pgap * pgap) + extra) * delta});
  }
  for (const auto& t : report.terms) report.leading_total += t.term;
  report.total = report.leading_total;
  return report;
}

inline std::string BoundReport::ToTable() const {
  std::ostringstream out;
  out << "algorithm: " << (algorithm == BoundAlgorithm::kThompson ? "ts" : "ucb")
      << "  form: " << form << "  mechanism: " << ToString(mechanism)
      << "  epsilon: " << FormatDouble(epsilon)
      << "  T: " << FormatDouble(horizon);
  if (algorithm == BoundAlgorithm::kThompson) {
    out << "  gamma: " << FormatDouble(gamma) << "  c0: " << FormatDouble(c0);
  }
  out << '\n';
  char line[160];
  std::snprintf(line, sizeof(line), "%5s %14s %18s %18s\n", "arm", "delta",
                "privatized_delta", "term");
  out << line;
  for (const auto& t : terms) {
    std::snprintf(line, sizeof(line), "%5zu %14.8g %18.10g %18.10g\n", t.arm,
                  t.gap, t.privatized_gap, t.term);
    out << line;
  }
  std::snprintf(line, sizeof(line), "%.10g", leading_total);
  out << "leading_total: " << line << '\n';
  std::snprintf(line, sizeof(line), "%.10g", constant_term);
  out << "constant_term: " << line << "  (" << constant_policy << ")\n";
  std::snprintf(line, sizeof(line), "%.10g", total);
  out << "total: " << line << '\n';
  return out.str();
}

// Per-arm rows under the header "arm,delta,privatized_delta,term", a blank
// line, then "key,value" footer rows for total, leading_total,
// constant_term, gamma, c0, epsilon and T.
inline std::string BoundReport::ToCsv() const {
  std::ostringstream out;
  out << "arm,delta,privatized_delta,term\n";
  for (const auto& t : terms) {
    out << t.arm << ',' << FormatDouble(t.gap) << ','
        << FormatDouble(t.privatized_gap) << ',' << FormatDouble(t.term) << '\n';
  }
  out << '\n';
  out << "total," << FormatDouble(total) << '\n';
  out << "leading_total," << FormatDouble(leading_total) << '\n';
  out << "constant_term," << FormatDouble(constant_term) << '\n';
  out << "gamma," << FormatDouble(gamma) << '\n';
  out << "c0," << FormatDouble(c0) << '\n';
  out << "epsilon," << FormatDouble(epsilon) << '\n';
  out << "T," << FormatDouble(horizon) << '\n';
  return out.str();
}

}  // namespace ldpb

#endif  // LDPB_BOUNDS_HPP_
