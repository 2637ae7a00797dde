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

#ifndef MKTINFO_ASYMPTOTIC_HPP_
#define MKTINFO_ASYMPTOTIC_HPP_

#include <cstdint>

namespace mktinfo {

/// Gamma(k, theta) null law of the estimated market information with
/// k = 2^{L-1} and theta = 1 / (ln 2 * N). N is the number of (L+1)-grams
/// actually counted, i.e. the number of bits minus L.
struct GammaParams {
  std::uint64_t shape = 1;
  double scale = 1.0;
  int length = 1;
  std::uint64_t total = 1;

  double mean() const { return static_cast<double>(shape) * scale; }
};

GammaParams gamma_params(int length, std::uint64_t total);

/// P(X > x) for the Erlang law, e^{-x/theta} sum_{m<k} (x/theta)^m / m!.
double survival(double x, const GammaParams& params);
double cdf(double x, const GammaParams& params);
double density(double x, const GammaParams& params);

/// x such that survival(x) = alpha, found by bisection on
/// [0, theta (k + 40)] to relative width `rel_tol`.
double critical_value(double alpha, const GammaParams& params,
                      double rel_tol = 1e-10);

/// Lah number L(k, l) = C(k-1, l-1) k! / l!.
std::uint64_t lah_number(int k, int l);

struct BoundParams {
  double t = 1.0;
  double p = 0.5;
  int q = 2;
  double epsilon = 1.0;
  double n = 100.0;
};

/// Upper bound on the remainder of the second-order expansion of
/// E[g_j(t, X/n_j)], X ~ Binomial(n_j, 1/2):
///
///   eps/96 (q-1)^{1-1/q} (4q-1)^3
///     sum_{l=1..4} |2^5 t p / (15 ln 2)|^l L(4,l) / (5ql-1)^{1/q}
///     n^{-2 + 1/(2q)}
///
/// epsilon = 1 gives the large-n form.
double error_bound(const BoundParams& params);

}  // namespace mktinfo

#endif  // MKTINFO_ASYMPTOTIC_HPP_
