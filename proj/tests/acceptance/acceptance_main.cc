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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ldpb/ldpb.hpp"

namespace {

using namespace ldpb;

constexpr double kInf = HUGE_VAL;
const std::vector<double> kEpsGrid = {0.1, 0.5, 1.0, 2.0, 5.0};

struct Verdict {
  bool passed = true;
  std::string detail;
};

// Collects failures; keeps the first few messages.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_ << (failures_ > 1 ? "; " : "") << what;
  }
  Verdict Finish(const std::string& summary) const {
    std::ostringstream d;
    d << checks_ << " checks";
    if (!summary.empty()) d << ", " << summary;
    if (failures_ > 0) d << ", " << failures_ << " failed: " << messages_.str();
    return {failures_ == 0, d.str()};
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::ostringstream messages_;
};

std::string Num(double x) { return FormatDouble(x); }

std::string Describe(const Mechanism& m) {
  std::string s = std::string(ToString(m.kind())) + "(eps=" + Num(m.epsilon());
  if (m.kind() == MechanismKind::kQuadratic) s += ",b=" + Num(m.b());
  return s + ")";
}

// linear, quadratic with b in {0, e^eps - 1, 2(e^eps - 1)}, exponential.
std::vector<Mechanism> MechanismGrid(double eps) {
  const auto budget = PrivacyBudget::Of(eps);
  return {Mechanism::Linear(budget), Mechanism::Quadratic(budget, 0.0),
          Mechanism::Quadratic(budget, budget.expm1()),
          Mechanism::Quadratic(budget, Mechanism::MaxQuadraticB(budget)),
          Mechanism::Exponential(budget)};
}

// Distinct arm laws of the preset.
std::vector<ArmDistribution> PresetLaws() {
  std::vector<ArmDistribution> out;
  for (const auto& group : Fig2Preset().arms) out.push_back(group.distribution);
  return out;
}

Verdict Criterion1() {
  Checker c;
  for (double eps : kEpsGrid) {
    for (const auto& m : MechanismGrid(eps)) {
      const double ratio = WorstCaseRatio(m, 1001);
      const double limit = std::exp(eps);
      c.Expect(ratio <= limit + 1e-9, Describe(m) + " ratio " + Num(ratio));
      c.Expect(VerifyLdpConditions(m, 1001).all_passed(),
               Describe(m) + " conditions");
      if (m.kind() != MechanismKind::kQuadratic) {
        const double at_endpoints =
            ResponseProbability(m, 1.0) / ResponseProbability(m, 0.0);
        c.Expect(std::abs(at_endpoints - limit) <= 1e-9,
                 Describe(m) + " p(1)/p(0) " + Num(at_endpoints));
        c.Expect(std::abs(ratio - limit) <= 1e-9,
                 Describe(m) + " attained " + Num(ratio));
      }
    }
  }
  return c.Finish("5 mechanisms x 5 budgets");
}

Verdict Criterion2() {
  Checker c;
  constexpr std::uint64_t kDraws = 1000000;
  double worst = 0.0;
  std::uint64_t stream = 0;
  for (double eps : kEpsGrid) {
    for (const auto& m : MechanismGrid(eps)) {
      for (double r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        Rng rng = MakeStream(20260401, stream++, StreamRole::kMechanism);
        std::uint64_t ones = 0;
        for (std::uint64_t k = 0; k < kDraws; ++k) {
          ones += static_cast<std::uint64_t>(Perturb(m, r, rng).value());
        }
        const double p = ResponseProbability(m, r);
        const double se = std::sqrt(p * (1.0 - p) / kDraws);
        const double z = std::abs(static_cast<double>(ones) / kDraws - p) / se;
        worst = std::max(worst, z);
        c.Expect(z <= 4.0, Describe(m) + " r=" + Num(r) + " z=" + Num(z));
      }
    }
  }
  return c.Finish("max |z| = " + Num(worst));
}

Verdict Criterion3() {
  Checker c;
  constexpr std::uint64_t kDraws = 1000000;
  double worst = 0.0;
  std::uint64_t stream = 0;
  for (double eps : {0.5, 1.0, 2.0}) {
    for (const auto& m : MechanismGrid(eps)) {
      for (const auto& law : PresetLaws()) {
        Rng env_rng = MakeStream(20260402, stream, StreamRole::kEnvironment);
        Rng mech_rng = MakeStream(20260402, stream, StreamRole::kMechanism);
        ++stream;
        std::uint64_t ones = 0;
        for (std::uint64_t k = 0; k < kDraws; ++k) {
          ones += static_cast<std::uint64_t>(
              Perturb(m, Sample(law, env_rng), mech_rng).value());
        }
        const double mu = PrivatizedMean(m, law);
        const double se = std::sqrt(mu * (1.0 - mu) / kDraws);
        const double z = std::abs(static_cast<double>(ones) / kDraws - mu) / se;
        worst = std::max(worst, z);
        c.Expect(z <= 4.0, Describe(m) + " " + ToString(law) + " z=" + Num(z));
      }
    }
  }
  return c.Finish("max |z| = " + Num(worst));
}

Verdict Criterion4() {
  Checker c;
  std::vector<BanditEnvironment> envs;
  envs.emplace_back(std::vector<ArmDistribution>{
      ArmDistribution::MakeBernoulli(0.9), ArmDistribution::MakeBernoulli(0.6),
      ArmDistribution::MakeBernoulli(0.45), ArmDistribution::MakeBernoulli(0.2),
      ArmDistribution::MakeBernoulli(0.0)});
  envs.emplace_back(std::vector<ArmDistribution>{
      ArmDistribution::MakeBernoulli(0.3), ArmDistribution::MakeBernoulli(1.0),
      ArmDistribution::MakeBernoulli(0.99)});
  Rng rng = MakeStream(20260403, 0, StreamRole::kEnvironment);
  for (int k = 0; k < 20; ++k) {
    std::vector<ArmDistribution> arms;
    const std::uint64_t n = 2 + UniformIndex(9, rng);
    for (std::uint64_t i = 0; i < n; ++i) {
      arms.push_back(ArmDistribution::MakeBernoulli(UniformDouble(rng)));
    }
    envs.emplace_back(std::move(arms));
  }
  double worst = 0.0;
  for (double eps : {0.5, 1.0, 2.0, 5.0}) {
    const auto budget = PrivacyBudget::Of(eps);
    const double scale = budget.expm1() / (budget.exp() + 1.0);
    for (double b : {0.0, 1.0, budget.expm1()}) {
      const auto m = Mechanism::Quadratic(budget, b);
      for (const auto& env : envs) {
        const GapReport gaps = PrivatizedGap(m, env);
        for (std::size_t i = 0; i < env.size(); ++i) {
          const double err =
              std::abs(gaps.privatized_gaps[i] - scale * env.gap(i));
          worst = std::max(worst, err);
          c.Expect(err <= 1e-12, Describe(m) + " arm " + std::to_string(i) +
                                     " err " + Num(err));
        }
      }
    }
  }
  return c.Finish(std::to_string(envs.size()) + " environments, max error " +
                  Num(worst));
}

Verdict Criterion5() {
  Checker c;
  const auto env = Fig2Preset().Environment();
  double worst_p = 0.0;
  double worst_bound = 0.0;
  for (double eps : kEpsGrid) {
    const auto budget = PrivacyBudget::Of(eps);
    const auto quad = Mechanism::Quadratic(budget, budget.expm1());
    const auto lin = Mechanism::Linear(budget);
    for (double r : UnitGrid(1001)) {
      const double err =
          std::abs(ResponseProbability(quad, r) - ResponseProbability(lin, r));
      worst_p = std::max(worst_p, err);
      c.Expect(err <= 1e-12, Describe(quad) + " r=" + Num(r));
    }
    for (double horizon : {1e3, 5e4, 1e5}) {
      const double q =
          TsBound(quad, env, horizon, 0.1, 1.0, TsBoundForm::kGap).total;
      const double l =
          TsBound(lin, env, horizon, 0.1, 1.0, TsBoundForm::kGap).total;
      worst_bound = std::max(worst_bound, std::abs(q - l));
      c.Expect(std::abs(q - l) <= 1e-12,
               Describe(quad) + " T=" + Num(horizon) + " " + Num(q) + " vs " +
                   Num(l));
    }
  }
  return c.Finish("max |dp| = " + Num(worst_p) + ", max |dbound| = " +
                  Num(worst_bound));
}

Verdict Criterion6() {
  Checker c;
  const auto env = Fig2Preset().Environment();
  double worst = 0.0;
  for (double eps : {0.5, 1.0, 2.0}) {
    const auto m = Mechanism::Exponential(PrivacyBudget::Of(eps));
    const GapReport gaps = PrivatizedGap(m, env);
    for (std::size_t i = 0; i < env.size(); ++i) {
      const double closed = ExponentialGapClosedForm(eps, env, i);
      const double err = std::abs(gaps.gaps_to_true_optimal[i] - closed);
      worst = std::max(worst, err);
      c.Expect(err <= 1e-10, "eps=" + Num(eps) + " arm " + std::to_string(i) +
                                 " err " + Num(err));
    }
  }
  return c.Finish("max error " + Num(worst));
}

// Mean and pooled standard error of the final regret of each preset cell.
struct CellStats {
  double mean;
  double stddev;
  std::size_t trials;
};

using CellKey = std::tuple<AgentKind, MechanismKind, double>;

std::string CellName(const CellKey& key) {
  const auto& [agent, mech, eps] = key;
  return std::string(ToString(agent)) + "/" + std::string(ToString(mech)) +
         "/eps=" + Num(eps);
}

class CellCache {
 public:
  const CellStats& Get(AgentKind agent, MechanismKind mech, double eps) {
    const CellKey key{agent, mech, eps};
    auto it = cells_.find(key);
    if (it != cells_.end()) return it->second;
    ExperimentConfig config = Fig2Preset();
    config.agent = agent;
    config.mechanism = mech;
    config.epsilon = eps;
    config.b = 0.0;
    config.horizon = 50000;
    config.trials = 50;
    config.checkpoints = std::vector<std::uint64_t>{config.horizon};
    const AggregateResult r = RunExperiment(config);
    std::printf("  cell %-28s mean %10.2f  sd %8.2f\n", CellName(key).c_str(),
                r.final_mean(), r.final_stddev());
    std::fflush(stdout);
    return cells_.emplace(key, CellStats{r.final_mean(), r.final_stddev(),
                                         r.trials})
        .first->second;
  }

 private:
  std::map<CellKey, CellStats> cells_;
};

double PooledSe(const CellStats& a, const CellStats& b) {
  return std::sqrt(a.stddev * a.stddev / static_cast<double>(a.trials) +
                   b.stddev * b.stddev / static_cast<double>(b.trials));
}

const std::vector<MechanismKind> kMechanisms = {
    MechanismKind::kLinear, MechanismKind::kQuadratic,
    MechanismKind::kExponential};

Verdict Criterion7(CellCache& cache) {
  Checker c;
  const std::vector<double> order = {0.5, 1.0, 2.0, kInf};
  double min_z = kInf;
  for (AgentKind agent : {AgentKind::kThompson, AgentKind::kUcb}) {
    for (MechanismKind mech : kMechanisms) {
      for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        const CellStats& hi = cache.Get(agent, mech, order[k]);
        const CellStats& lo = cache.Get(agent, mech, order[k + 1]);
        const double z = (hi.mean - lo.mean) / PooledSe(hi, lo);
        min_z = std::min(min_z, z);
        c.Expect(z > 1.0, CellName({agent, mech, order[k]}) + " vs eps=" +
                              Num(order[k + 1]) + " z=" + Num(z));
      }
    }
  }
  return c.Finish("min separation " + Num(min_z) + " pooled SE");
}

Verdict Criterion8(CellCache& cache) {
  Checker c;
  double min_z = kInf;
  for (MechanismKind mech : kMechanisms) {
    for (double eps : {1.0, 2.0}) {
      const CellStats& ts = cache.Get(AgentKind::kThompson, mech, eps);
      const CellStats& ucb = cache.Get(AgentKind::kUcb, mech, eps);
      const double z = (ucb.mean - ts.mean) / PooledSe(ts, ucb);
      min_z = std::min(min_z, z);
      c.Expect(z > 1.0, std::string(ToString(mech)) + " eps=" + Num(eps) +
                            " z=" + Num(z));
    }
  }
  return c.Finish("min separation " + Num(min_z) + " pooled SE");
}

// Coefficient of determination of the least-squares line y ~ a + b x.
double RSquared(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / n;
    my += y[i] / n;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy * sxy / (sxx * syy);
}

Verdict Criterion9() {
  Checker c;
  ExperimentConfig config = Fig2Preset();
  config.agent = AgentKind::kThompson;
  config.mechanism = MechanismKind::kLinear;
  config.epsilon = 1.0;
  config.horizon = 100000;
  config.trials = 50;
  const AggregateResult r = RunExperiment(config);
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t j = 0; j < r.checkpoints.size(); ++j) {
    if (r.checkpoints[j] * 10 >= config.horizon) {
      x.push_back(std::log(static_cast<double>(r.checkpoints[j])));
      y.push_back(r.mean[j]);
    }
  }
  const double r2 = RSquared(x, y);
  c.Expect(r2 >= 0.95, "R^2 " + Num(r2));
  const BoundReport bound =
      TsBound(config.MakeMechanism(), config.Environment(),
              static_cast<double>(config.horizon), 0.1, 1.0);
  c.Expect(r.final_mean() < bound.total, "regret " + Num(r.final_mean()) +
                                             " >= bound " + Num(bound.total));
  char summary[160];
  std::snprintf(summary, sizeof summary,
                "R^2 %.4f over %zu checkpoints, regret %.1f < bound %.1f",
                r2, x.size(), r.final_mean(), bound.total);
  return c.Finish(summary);
}

Verdict Criterion10() {
  Checker c;
  std::vector<ExperimentConfig> configs;
  for (AgentKind agent : {AgentKind::kThompson, AgentKind::kUcb}) {
    for (MechanismKind mech : kMechanisms) {
      ExperimentConfig config = Fig2Preset();
      config.agent = agent;
      config.mechanism = mech;
      config.epsilon = 0.5;
      config.horizon = 5000;
      config.trials = 8;
      config.seed = 424242;
      configs.push_back(config);
    }
  }
  for (const auto& config : configs) {
    const std::string first = RegretCsv(RunExperiment(config, 1));
    const std::string second = RegretCsv(RunExperiment(config, 4));
    const std::string third = RegretCsv(RunExperiment(config));
    c.Expect(first == second && second == third,
             CellStem(config) + " differs between runs");
  }
  return c.Finish(std::to_string(configs.size()) + " configs x 3 runs");
}

}  // namespace

int main() {
  CellCache cache;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"LDP guarantee (analytic)", Criterion1},
      {"LDP guarantee (empirical)", Criterion2},
      {"privatized-mean formulas", Criterion3},
      {"Bernoulli collapse of quadratic gaps", Criterion4},
      {"linear special case of the quadratic mechanism", Criterion5},
      {"exponential gap identity", Criterion6},
      {"regret ordering across budgets", [&] { return Criterion7(cache); }},
      {"Thompson sampling beats UCB", [&] { return Criterion8(cache); }},
      {"logarithmic regret growth and bound", Criterion9},
      {"determinism", Criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (!v.passed) ++failed;
    std::printf("%s %zu: %s [%s] (%.1fs)\n", v.passed ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
