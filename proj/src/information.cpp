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

#include "mktinfo/information.hpp"

#include <cmath>
#include <string>

#include "mktinfo/error.hpp"

namespace mktinfo {
namespace {

void validate_distribution(std::span<const double> dist) {
  if (dist.empty()) {
    throw Error(ErrorKind::kDomain, "distribution is empty");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (!(dist[i] >= 0.0) || !std::isfinite(dist[i])) {
      throw Error(ErrorKind::kDomain,
                  "probability at " + std::to_string(i) + " is negative");
    }
    total += dist[i];
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorKind::kDomain,
                "probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

void validate_conditionals(std::span<const double> p,
                           std::span<const std::optional<double>> pi) {
  validate_distribution(p);
  if (pi.size() != p.size()) {
    throw Error(ErrorKind::kInconsistency,
                "prefix and conditional arrays differ in length");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && !pi[i].has_value()) {
      throw Error(ErrorKind::kInconsistency,
                  "conditional probability undefined for observed prefix " +
                      std::to_string(i + 1));
    }
    if (pi[i].has_value() && !(*pi[i] >= 0.0 && *pi[i] <= 1.0)) {
      throw Error(ErrorKind::kDomain, "conditional probability at " +
                                          std::to_string(i + 1) +
                                          " outside [0, 1]");
    }
  }
}

}  // namespace

double xlog2x(double x) {
  if (x == 0.0) return 0.0;
  return x * std::log2(x);
}

double binary_entropy(double pi) { return -(xlog2x(pi) + xlog2x(1.0 - pi)); }

double shannon_entropy(std::span<const double> dist) {
  validate_distribution(dist);
  double h = 0.0;
  for (double p : dist) h -= xlog2x(p);
  return h;
}

double entropy_full(std::span<const double> p,
                    std::span<const std::optional<double>> pi) {
  validate_conditionals(p, pi);
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    const double up = p[i] * *pi[i];
    const double down = p[i] * (1.0 - *pi[i]);
    h -= xlog2x(up) + xlog2x(down);
  }
  return h;
}

double entropy_star(std::span<const double> p) {
  return 1.0 + shannon_entropy(p);
}

double market_information(std::span<const double> p,
                          std::span<const std::optional<double>> pi) {
  validate_conditionals(p, pi);
  double info = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    info += p[i] * (1.0 - binary_entropy(*pi[i]));
  }
  return info;
}

InformationEstimate estimate_information(const PatternTable& table) {
  auto probs = empirical_probs(table);
  InformationEstimate est;
  est.length = table.length;
  est.total = table.total;
  est.entropy_full = entropy_full(probs.p_hat, probs.pi_hat);
  est.entropy_star = entropy_star(probs.p_hat);
  est.info = market_information(probs.p_hat, probs.pi_hat);
  est.p_hat = std::move(probs.p_hat);
  est.pi_hat = std::move(probs.pi_hat);
  return est;
}

InformationEstimate estimate_information(const BinarySequence& bits,
                                         int length) {
  return estimate_information(count_patterns(bits, length));
}

}  // namespace mktinfo
