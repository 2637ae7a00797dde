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

#include "mktinfo/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mktinfo/error.hpp"
#include "mktinfo/symbolic.hpp"

namespace mktinfo {

GammaParams gamma_params(int length, std::uint64_t total) {
  validate_pattern_length(length);
  if (total < 1) {
    throw Error(ErrorKind::kDomain, "sample count N must be positive");
  }
  GammaParams params;
  params.length = length;
  params.total = total;
  params.shape = std::uint64_t{1} << (length - 1);
  params.scale = 1.0 / (std::numbers::ln2 * static_cast<double>(total));
  return params;
}

double survival(double x, const GammaParams& params) {
  if (!(x >= 0.0)) {
    throw Error(ErrorKind::kDomain, "survival needs x >= 0");
  }
  if (x == 0.0) return 1.0;
  const double y = x / params.scale;
  if (params.shape == 1) return std::exp(-y);

  // Terms are formed in log space so that large k or y neither overflow the
  // powers nor underflow e^{-y} prematurely.
  std::vector<double> terms;
  terms.reserve(params.shape);
  const double log_y = std::log(y);
  for (std::uint64_t m = 0; m < params.shape; ++m) {
    const auto md = static_cast<double>(m);
    terms.push_back(std::exp(-y + md * log_y - std::lgamma(md + 1.0)));
  }
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return std::min(sum, 1.0);
}

double cdf(double x, const GammaParams& params) {
  return 1.0 - survival(x, params);
}

double density(double x, const GammaParams& params) {
  if (x < 0.0) return 0.0;
  const auto k = static_cast<double>(params.shape);
  if (x == 0.0) return params.shape == 1 ? 1.0 / params.scale : 0.0;
  const double y = x / params.scale;
  return std::exp((k - 1.0) * std::log(y) - y - std::lgamma(k)) /
         params.scale;
}

double critical_value(double alpha, const GammaParams& params,
                      double rel_tol) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::kDomain, "alpha must lie in (0, 1)");
  }
  double lo = 0.0;
  double hi = params.scale * (static_cast<double>(params.shape) + 40.0);
  while (survival(hi, params) > alpha) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (survival(mid, params) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::uint64_t lah_number(int k, int l) {
  if (k < 1 || l < 1 || l > k) {
    throw Error(ErrorKind::kDomain, "Lah number needs 1 <= l <= k");
  }
  if (k > 20) {
    throw Error(ErrorKind::kRange, "Lah number L(" + std::to_string(k) + ", " +
                                       std::to_string(l) +
                                       ") exceeds 64-bit range guard");
  }
  // C(k-1, l-1) * (k! / l!), both exact in 64 bits for k <= 20.
  std::uint64_t binom = 1;
  for (int i = 1; i <= l - 1; ++i) {
    binom = binom * static_cast<std::uint64_t>(k - l + i) /
            static_cast<std::uint64_t>(i);
  }
  std::uint64_t falling = 1;
  for (int i = l + 1; i <= k; ++i) falling *= static_cast<std::uint64_t>(i);
  return binom * falling;
}

double error_bound(const BoundParams& params) {
  if (params.q < 2) {
    throw Error(ErrorKind::kDomain, "error bound needs q >= 2");
  }
  if (!(params.epsilon >= 1.0)) {
    throw Error(ErrorKind::kDomain, "error bound needs epsilon >= 1");
  }
  if (!(params.n > 0.0)) {
    throw Error(ErrorKind::kDomain, "error bound needs n > 0");
  }
  const auto q = static_cast<double>(params.q);
  const double a =
      std::abs(32.0 * params.t * params.p / (15.0 * std::numbers::ln2));
  double sum = 0.0;
  for (int l = 1; l <= 4; ++l) {
    const auto ld = static_cast<double>(l);
    sum += std::pow(a, ld) * static_cast<double>(lah_number(4, l)) /
           std::pow(5.0 * q * ld - 1.0, 1.0 / q);
  }
  const double front = params.epsilon / 96.0 * std::pow(q - 1.0, 1.0 - 1.0 / q) *
                       std::pow(4.0 * q - 1.0, 3.0);
  return front * sum * std::pow(params.n, -2.0 + 1.0 / (2.0 * q));
}

}  // namespace mktinfo
