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

#ifndef MKTINFO_INFORMATION_HPP_
#define MKTINFO_INFORMATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mktinfo/symbolic.hpp"

namespace mktinfo {

/// Slack allowed on the normalization of user-supplied distributions.
inline constexpr double kNormalizationTolerance = 1e-9;

/// All entropies are in bits.
struct InformationEstimate {
  int length = 0;
  std::uint64_t total = 0;
  std::vector<double> p_hat;
  std::vector<std::optional<double>> pi_hat;
  double entropy_full = 0.0;  // H^{L+1}
  double entropy_star = 0.0;  // H^{L+1} of an efficient market, 1 + H^L
  double info = 0.0;          // market information, entropy_star - entropy_full
};

/// x log2(x) with the convention 0 log2(0) = 0.
double xlog2x(double x);

/// Binary entropy H_b(pi) in bits.
double binary_entropy(double pi);

double shannon_entropy(std::span<const double> dist);

/// Entropy of the (L+1)-gram law built from prefix probabilities `p` and
/// conditional suffix-one probabilities `pi`.
double entropy_full(std::span<const double> p,
                    std::span<const std::optional<double>> pi);

/// 1 + H^L: the (L+1)-gram entropy when every suffix is a fair coin.
double entropy_star(std::span<const double> p);

/// Market information in bits, always in [0, 1].
///
/// Evaluated prefix by prefix as sum_i p_i (1 - H_b(pi_i)), which equals
/// entropy_star(p) - entropy_full(p, pi) and vanishes exactly when every
/// observed pi_i is 1/2.
double market_information(std::span<const double> p,
                          std::span<const std::optional<double>> pi);

InformationEstimate estimate_information(const BinarySequence& bits,
                                         int length);
InformationEstimate estimate_information(const PatternTable& table);

}  // namespace mktinfo

#endif  // MKTINFO_INFORMATION_HPP_
