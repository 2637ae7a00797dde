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

#include "mktinfo/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "mktinfo/efficiency_test.hpp"
#include "mktinfo/error.hpp"
#include "mktinfo/information.hpp"

namespace mktinfo {
namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kDomain,
                std::string(name) + " must lie in [0, 1], got " +
                    std::to_string(p));
  }
}

TrialRecord run_trial(const GeneratorSpec& spec, int length,
                      std::uint64_t trial, std::uint64_t seed) {
  std::mt19937_64 engine(derive_seed(seed, trial));
  const auto bits = generate_bits(spec, engine);
  TrialRecord record;
  record.trial = trial;
  auto estimate = estimate_information(bits, length);
  record.info = estimate.info;
  try {
    record.p_value = test_estimate(std::move(estimate)).p_value;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kUnobservedPrefix) throw;
  }
  return record;
}

}  // namespace

GeneratorSpec GeneratorSpec::fair_coin(std::uint64_t n) {
  GeneratorSpec spec;
  spec.kind = Kind::kFairCoin;
  spec.n = n;
  return spec;
}

GeneratorSpec GeneratorSpec::biased_coin(double p, std::uint64_t n) {
  GeneratorSpec spec;
  spec.kind = Kind::kBiasedCoin;
  spec.p = p;
  spec.n = n;
  return spec;
}

GeneratorSpec GeneratorSpec::markov(double pi_0, double pi_1, std::uint64_t n) {
  GeneratorSpec spec;
  spec.kind = Kind::kMarkov;
  spec.pi_0 = pi_0;
  spec.pi_1 = pi_1;
  spec.n = n;
  return spec;
}

void GeneratorSpec::validate() const {
  if (n == 0) throw Error(ErrorKind::kDomain, "generator needs n >= 1");
  check_probability(p, "p");
  check_probability(pi_0, "pi_0");
  check_probability(pi_1, "pi_1");
}

GeneratorSpec GeneratorSpec::canonical() const {
  switch (kind) {
    case Kind::kFairCoin:
      return markov(0.5, 0.5, n);
    case Kind::kBiasedCoin:
      return markov(p, p, n);
    case Kind::kMarkov:
      return markov(pi_0, pi_1, n);
  }
  return *this;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

BinarySequence generate_bits(const GeneratorSpec& spec,
                             std::mt19937_64& engine) {
  spec.validate();
  const auto chain = spec.canonical();
  const double denom = 1.0 - chain.pi_1 + chain.pi_0;
  const double first = denom > 0.0 ? chain.pi_0 / denom : 0.5;

  BinarySequence seq;
  seq.bits.resize(chain.n);
  double prob = first;
  for (auto& bit : seq.bits) {
    bit = uniform01(engine) < prob ? 1 : 0;
    prob = bit ? chain.pi_1 : chain.pi_0;
  }
  return seq;
}

SimulationReport simulate(const GeneratorSpec& spec, int length,
                          std::uint64_t trials, std::uint64_t seed,
                          unsigned workers) {
  spec.validate();
  validate_pattern_length(length);
  if (spec.n < static_cast<std::uint64_t>(length) + 1) {
    throw Error(ErrorKind::kInputTooShort,
                "trajectories of " + std::to_string(spec.n) +
                    " bits cannot hold an (L+1)-gram for L = " +
                    std::to_string(length));
  }
  if (trials < 1) throw Error(ErrorKind::kDomain, "need at least one trial");

  SimulationReport report;
  report.seed = seed;
  report.trials = trials;
  report.params = gamma_params(length, spec.n - static_cast<std::uint64_t>(length));
  report.records.resize(trials);

  const auto cap = static_cast<unsigned>(std::min<std::uint64_t>(trials, 1024));
  workers = std::clamp(workers, 1U, cap);
  if (workers == 1) {
    for (std::uint64_t t = 0; t < trials; ++t) {
      report.records[t] = run_trial(spec, length, t, seed);
    }
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::uint64_t begin = w * chunk;
          const std::uint64_t end = std::min(trials, begin + chunk);
          for (std::uint64_t t = begin; t < end; ++t) {
            report.records[t] = run_trial(spec, length, t, seed);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Reduction in trial order.
  std::vector<std::uint64_t> rejected(kConfidenceLevels.size(), 0);
  for (const auto& record : report.records) {
    if (!record.p_value) {
      ++report.unobserved;
      continue;
    }
    report.samples.push_back(record.info);
    for (std::size_t k = 0; k < kSignificanceLevels.size(); ++k) {
      if (*record.p_value < kSignificanceLevels[k]) ++rejected[k];
    }
  }
  if (!report.samples.empty()) {
    const auto kept = static_cast<double>(report.samples.size());
    for (std::size_t k = 0; k < kConfidenceLevels.size(); ++k) {
      report.rejection_rates[kConfidenceLevels[k]] =
          static_cast<double>(rejected[k]) / kept;
    }
    report.ks_statistic = ks_statistic(report.samples, report.params);
    report.ks_pvalue = ks_pvalue(*report.ks_statistic, report.samples.size());
  }
  return report;
}

double ks_statistic(std::span<const double> samples, const GammaParams& params) {
  if (samples.empty()) {
    throw Error(ErrorKind::kEmptyTable, "KS statistic needs samples");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(std::max(sorted[i], 0.0), params);
    const auto rank = static_cast<double>(i);
    d = std::max({d, (rank + 1.0) / m - f, f - rank / m});
  }
  return d;
}

double ks_pvalue(double d, std::uint64_t m) {
  if (m < 1) throw Error(ErrorKind::kDomain, "KS p-value needs m >= 1");
  const double z = std::sqrt(static_cast<double>(m)) * d;
  if (z <= 0.0) return 1.0;
  double q = 0.0;
  if (z < 1.18) {
    // Equivalent theta-function form; the alternating series converges
    // poorly for small z.
    const double y = std::exp(-std::numbers::pi * std::numbers::pi / (8.0 * z * z));
    double s = 0.0;
    for (int j = 1; j < 100; ++j) {
      const double odd = 2.0 * j - 1.0;
      const double term = std::pow(y, odd * odd);
      s += term;
      if (term < 1e-12 * s) break;
    }
    q = 1.0 - std::sqrt(2.0 * std::numbers::pi) / z * s;
  } else {
    for (int j = 1; j < 1000; ++j) {
      const double jd = j;
      const double term = std::exp(-2.0 * jd * jd * z * z);
      q += (j % 2 == 1 ? 2.0 : -2.0) * term;
      if (term < 1e-12) break;
    }
  }
  return std::clamp(q, 0.0, 1.0);
}

double ks_critical_value(double alpha, std::uint64_t m) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::kDomain, "alpha must lie in (0, 1)");
  }
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ks_pvalue(mid, m) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> sample_gamma(const GammaParams& params, std::uint64_t count,
                                 std::uint64_t seed) {
  std::mt19937_64 engine(derive_seed(seed, 0));
  std::vector<double> out;
  out.reserve(count);
  while (out.size() < count) {
    const double u = uniform01(engine);
    if (u <= 0.0) continue;
    // survival(x) = u  <=>  cdf(x) = 1 - u
    out.push_back(critical_value(u, params, 1e-13));
  }
  return out;
}

std::vector<CalibrationPoint> calibration_curve(
    int length, std::span<const std::uint64_t> n_grid, std::uint64_t trials,
    std::uint64_t seed, unsigned workers) {
  std::vector<CalibrationPoint> curve;
  curve.reserve(n_grid.size());
  for (auto n : n_grid) {
    const auto report =
        simulate(GeneratorSpec::fair_coin(n), length, trials, seed, workers);
    curve.push_back({n, report.ks_statistic, report.ks_pvalue, report.unobserved});
  }
  return curve;
}

}  // namespace mktinfo
