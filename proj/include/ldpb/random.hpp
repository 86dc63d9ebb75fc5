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

#ifndef LDPB_RANDOM_HPP_
#define LDPB_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ldpb {

// Random streams are std::mt19937_64, whose output sequence is fixed by the
// C++ standard. The std::*_distribution adaptors are not: their algorithms are
// implementation-defined. Every variate used by the library is therefore
// produced by the samplers below so that a seed pins a trace on every
// toolchain.
using Rng = std::mt19937_64;

// Roles of the independent sub-streams within one trial.
enum class StreamRole : std::uint64_t {
  kEnvironment = 1,
  kMechanism = 2,
  kAgent = 3,
};

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Seed of sub-stream `role` of trial `trial_index` under `base_seed`.
constexpr std::uint64_t DeriveSeed(std::uint64_t base_seed,
                                   std::uint64_t trial_index,
                                   StreamRole role) {
  std::uint64_t h = Mix64(base_seed);
  h = Mix64(h ^ trial_index);
  return Mix64(h ^ static_cast<std::uint64_t>(role));
}

inline Rng MakeStream(std::uint64_t base_seed, std::uint64_t trial_index,
                      StreamRole role) {
  return Rng(DeriveSeed(base_seed, trial_index, role));
}

// Uniform on [0, 1) with 53 random bits. Consumes one engine output.
inline double UniformDouble(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on (0, 1].
inline double UniformOpenLow(Rng& rng) { return 1.0 - UniformDouble(rng); }

// Standard normal by Box-Muller, one output per call (two engine outputs).
inline double StandardNormal(Rng& rng) {
  const double u1 = UniformOpenLow(rng);
  const double u2 = UniformDouble(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

// Gamma(shape, 1). Marsaglia-Tsang squeeze for shape >= 1; for shape < 1 the
// boosted form Gamma(shape + 1) * U^(1/shape).
inline double Gamma(double shape, Rng& rng) {
  if (shape < 1.0) {
    const double g = Gamma(shape + 1.0, rng);
    return g * std::pow(UniformOpenLow(rng), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = StandardNormal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = UniformOpenLow(rng);
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// Beta(a, b) as the gamma ratio X / (X + Y).
inline double Beta(double a, double b, Rng& rng) {
  const double x = Gamma(a, rng);
  const double y = Gamma(b, rng);
  return x / (x + y);
}

// Uniform integer in [0, n) by rejection, n >= 1.
inline std::uint64_t UniformIndex(std::uint64_t n, Rng& rng) {
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace ldpb

#endif  // LDPB_RANDOM_HPP_
