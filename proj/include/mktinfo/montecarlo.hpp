// Copyright 2026 The mktinfo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MKTINFO_MONTECARLO_HPP_
#define MKTINFO_MONTECARLO_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mktinfo/asymptotic.hpp"
#include "mktinfo/symbolic.hpp"

namespace mktinfo {

inline constexpr std::uint64_t kDefaultTrials = 1000;

/// Bit-trajectory generator. fair_coin and biased_coin are special cases of a
/// two-state Markov chain; `canonical()` rewrites them as such.
struct GeneratorSpec {
  enum class Kind { kFairCoin, kBiasedCoin, kMarkov };

  Kind kind = Kind::kFairCoin;
  double p = 0.5;     // biased coin: P(X = 1)
  double pi_0 = 0.5;  // markov: P(X_t = 1 | X_{t-1} = 0)
  double pi_1 = 0.5;  // markov: P(X_t = 1 | X_{t-1} = 1)
  std::uint64_t n = 100;

  static GeneratorSpec fair_coin(std::uint64_t n);
  static GeneratorSpec biased_coin(double p, std::uint64_t n);
  static GeneratorSpec markov(double pi_0, double pi_1, std::uint64_t n);

  /// Throws kDomain on probabilities outside [0, 1] or n = 0.
  void validate() const;
  GeneratorSpec canonical() const;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// splitmix64 finalizer over (seed, stream). Used for per-trial child seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform01(std::mt19937_64& engine);

BinarySequence generate_bits(const GeneratorSpec& spec,
                             std::mt19937_64& engine);

struct TrialRecord {
  std::uint64_t trial = 0;
  double info = 0.0;
  std::optional<double> p_value;  // empty when a prefix went unobserved
};

struct SimulationReport {
  std::vector<TrialRecord> records;
  /// Estimated information for every trial whose prefixes were all observed.
  std::vector<double> samples;
  std::uint64_t unobserved = 0;
  GammaParams params;
  std::optional<double> ks_statistic;
  std::optional<double> ks_pvalue;
  /// Confidence level -> fraction of retained samples rejected at it.
  std::map<double, double> rejection_rates;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
};

/// Runs `trials` independent trajectories. The output does not depend on
/// `workers`.
SimulationReport simulate(const GeneratorSpec& spec, int length,
                          std::uint64_t trials, std::uint64_t seed,
                          unsigned workers = 1);

/// Two-sided one-sample Kolmogorov-Smirnov distance to the gamma law.
double ks_statistic(std::span<const double> samples, const GammaParams& params);

/// Asymptotic Kolmogorov tail Q(sqrt(m) d).
double ks_pvalue(double d, std::uint64_t m);

/// Distance d with ks_pvalue(d, m) = alpha.
double ks_critical_value(double alpha, std::uint64_t m);

/// `count` draws from the gamma law by inverting its survival function.
std::vector<double> sample_gamma(const GammaParams& params, std::uint64_t count,
                                 std::uint64_t seed);

struct CalibrationPoint {
  std::uint64_t n = 0;
  std::optional<double> ks_statistic;
  std::optional<double> ks_pvalue;
  std::uint64_t unobserved = 0;
};

/// Fair-coin simulate() at each n of the grid, all with the same seed.
std::vector<CalibrationPoint> calibration_curve(
    int length, std::span<const std::uint64_t> n_grid, std::uint64_t trials,
    std::uint64_t seed, unsigned workers = 1);

}  // namespace mktinfo

#endif  // MKTINFO_MONTECARLO_HPP_
