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

// Reward laws supported on [0, 1] and bandit environments built from them.

#ifndef LDPB_DISTRIBUTIONS_HPP_
#define LDPB_DISTRIBUTIONS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "ldpb/errors.hpp"
#include "ldpb/format.hpp"
#include "ldpb/random.hpp"

namespace ldpb {

struct Bernoulli {
  double mu;
};
struct BetaLaw {
  double alpha;
  double beta;
};
// Reward hi with probability p_hi, otherwise lo.
struct TwoPoint {
  double lo;
  double hi;
  double p_hi;
};
struct UniformInterval {
  double lo;
  double hi;
};

class ArmDistribution {
 public:
  using Variant = std::variant<Bernoulli, BetaLaw, TwoPoint, UniformInterval>;

  static ArmDistribution MakeBernoulli(double mu) {
    if (!(mu >= 0.0 && mu <= 1.0)) Fail("bernoulli mu must lie in [0, 1]");
    return ArmDistribution(Bernoulli{mu});
  }
  static ArmDistribution MakeBeta(double alpha, double beta) {
    if (!(alpha > 0.0 && beta > 0.0) || std::isinf(alpha) ||
        std::isinf(beta)) {
      Fail("beta shape parameters must be positive and finite");
    }
    return ArmDistribution(BetaLaw{alpha, beta});
  }
  static ArmDistribution MakeTwoPoint(double lo, double hi, double p_hi) {
    if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
      Fail("two-point support must satisfy 0 <= lo < hi <= 1");
    }
    if (!(p_hi >= 0.0 && p_hi <= 1.0)) Fail("two-point p_hi must lie in [0, 1]");
    return ArmDistribution(TwoPoint{lo, hi, p_hi});
  }
  static ArmDistribution MakeUniform(double lo, double hi) {
    if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
      Fail("uniform interval must satisfy 0 <= lo < hi <= 1");
    }
    return ArmDistribution(UniformInterval{lo, hi});
  }

  const Variant& law() const { return law_; }

 private:
  explicit ArmDistribution(Variant law) : law_(std::move(law)) {}
  [[noreturn]] static void Fail(const char* what) { throw DomainError(what); }

  Variant law_;
};

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

inline double Sample(const ArmDistribution& dist, Rng& rng) {
  return std::visit(
      Overloaded{
          [&](const Bernoulli& d) {
            return UniformDouble(rng) < d.mu ? 1.0 : 0.0;
          },
          [&](const BetaLaw& d) { return ldpb::Beta(d.alpha, d.beta, rng); },
          [&](const TwoPoint& d) {
            return UniformDouble(rng) < d.p_hi ? d.hi : d.lo;
          },
          [&](const UniformInterval& d) {
            return d.lo + (d.hi - d.lo) * UniformDouble(rng);
          },
      },
      dist.law());
}

inline double Mean(const ArmDistribution& dist) {
  return std::visit(
      Overloaded{
          [](const Bernoulli& d) { return d.mu; },
          [](const BetaLaw& d) { return d.alpha / (d.alpha + d.beta); },
          [](const TwoPoint& d) { return d.p_hi * d.hi + (1.0 - d.p_hi) * d.lo; },
          [](const UniformInterval& d) { return 0.5 * (d.lo + d.hi); },
      },
      dist.law());
}

inline double Variance(const ArmDistribution& dist) {
  return std::visit(
      Overloaded{
          [](const Bernoulli& d) { return d.mu * (1.0 - d.mu); },
          [](const BetaLaw& d) {
            const double s = d.alpha + d.beta;
            return d.alpha * d.beta / (s * s * (s + 1.0));
          },
          [](const TwoPoint& d) {
            const double w = d.hi - d.lo;
            return d.p_hi * (1.0 - d.p_hi) * w * w;
          },
          [](const UniformInterval& d) {
            const double w = d.hi - d.lo;
            return w * w / 12.0;
          },
      },
      dist.law());
}

// Relative tolerance of the Beta MGF quadrature.
inline constexpr double kMgfQuadratureTolerance = 1e-10;

namespace detail {

// E[e^(eps R)] for R ~ Beta(alpha, beta) by tanh-sinh quadrature of the
// density. The two-argument integrand receives the distance to the nearest
// endpoint, which keeps (1 - x) accurate near 1 where the density may blow up.
inline double BetaMgf(const BetaLaw& d, double epsilon) {
  const double log_norm = std::log(boost::math::beta(d.alpha, d.beta));
  auto integrand = [&](double x, double xc) {
    const double one_minus_x = x <= 0.5 ? 1.0 - x : xc;
    if (x <= 0.0 || one_minus_x <= 0.0) {
      // Endpoints are never sampled by tanh-sinh; guard anyway.
      return 0.0;
    }
    return std::exp((d.alpha - 1.0) * std::log(x) +
                    (d.beta - 1.0) * std::log(one_minus_x) + epsilon * x -
                    log_norm);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(integrand, 0.0, 1.0,
                              kMgfQuadratureTolerance * 1e-2);
}

}  // namespace detail

// E[e^(eps R)]. Closed form except for Beta, which uses quadrature.
inline double Mgf(const ArmDistribution& dist, double epsilon) {
  if (!(epsilon >= 0.0) || std::isinf(epsilon)) {
    throw DomainError("mgf needs a finite, non-negative epsilon");
  }
  if (epsilon == 0.0) return 1.0;
  return std::visit(
      Overloaded{
          [&](const Bernoulli& d) {
            return (1.0 - d.mu) + d.mu * std::exp(epsilon);
          },
          [&](const BetaLaw& d) { return detail::BetaMgf(d, epsilon); },
          [&](const TwoPoint& d) {
            return (1.0 - d.p_hi) * std::exp(epsilon * d.lo) +
                   d.p_hi * std::exp(epsilon * d.hi);
          },
          [&](const UniformInterval& d) {
            // (e^(eps hi) - e^(eps lo)) / (eps (hi - lo)), via expm1.
            const double z = epsilon * (d.hi - d.lo);
            return std::exp(epsilon * d.lo) * std::expm1(z) / z;
          },
      },
      dist.law());
}

// tau(eps) = E[e^(eps R)] - e^(eps mu) >= 0.
inline double JensenGap(const ArmDistribution& dist, double epsilon) {
  return Mgf(dist, epsilon) - std::exp(epsilon * Mean(dist));
}

// Text form used by the config files, e.g. "beta(4,1)".
inline std::string ToString(const ArmDistribution& dist) {
  return std::visit(
      Overloaded{
          [](const Bernoulli& d) {
            return "bernoulli(" + FormatDouble(d.mu) + ")";
          },
          [](const BetaLaw& d) {
            return "beta(" + FormatDouble(d.alpha) + "," +
                   FormatDouble(d.beta) + ")";
          },
          [](const TwoPoint& d) {
            return "twopoint(" + FormatDouble(d.lo) + "," + FormatDouble(d.hi) +
                   "," + FormatDouble(d.p_hi) + ")";
          },
          [](const UniformInterval& d) {
            return "uniform(" + FormatDouble(d.lo) + "," + FormatDouble(d.hi) +
                   ")";
          },
      },
      dist.law());
}

// An ordered list of arms. The optimal arm is the first arm of maximal mean.
class BanditEnvironment {
 public:
  explicit BanditEnvironment(std::vector<ArmDistribution> arms)
      : arms_(std::move(arms)) {
    if (arms_.empty()) throw DomainError("environment needs at least one arm");
    means_.reserve(arms_.size());
    for (const auto& a : arms_) means_.push_back(Mean(a));
    optimal_ = static_cast<std::size_t>(
        std::max_element(means_.begin(), means_.end()) - means_.begin());
  }

  std::size_t size() const { return arms_.size(); }
  const std::vector<ArmDistribution>& arms() const { return arms_; }
  const ArmDistribution& arm(std::size_t i) const { return arms_.at(i); }
  const std::vector<double>& means() const { return means_; }

  std::size_t optimal_arm() const { return optimal_; }
  double optimal_mean() const { return means_[optimal_]; }

  // Delta_i = mu_1 - mu_i, zero for the optimal arm.
  double gap(std::size_t i) const { return optimal_mean() - means_.at(i); }
  std::vector<double> gaps() const {
    std::vector<double> out;
    out.reserve(means_.size());
    for (double m : means_) out.push_back(optimal_mean() - m);
    return out;
  }

  // Smallest gap over arms other than the optimal one. Zero when another arm
  // ties the optimum or when there is only one arm.
  double min_gap() const {
    if (arms_.size() < 2) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < means_.size(); ++i) {
      if (i != optimal_) best = std::min(best, gap(i));
    }
    return best;
  }
  double max_gap() const {
    return optimal_mean() - *std::min_element(means_.begin(), means_.end());
  }
  bool is_degenerate() const { return !(min_gap() > 0.0); }

 private:
  std::vector<ArmDistribution> arms_;
  std::vector<double> means_;
  std::size_t optimal_ = 0;
};

}  // namespace ldpb

#endif  // LDPB_DISTRIBUTIONS_HPP_
