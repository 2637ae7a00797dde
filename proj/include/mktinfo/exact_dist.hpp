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

#ifndef MKTINFO_EXACT_DIST_HPP_
#define MKTINFO_EXACT_DIST_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace mktinfo {

/// Default cap on the number of (j_1, ..., j_{2^L}) tuples a nested sum may
/// visit. The cost is prod_i (n_i + 1).
inline constexpr std::uint64_t kDefaultTermBudget = 10'000'000;

/// Prefix counts n_i and probabilities p_i = n_i / sum(n), under which the
/// suffix counts are independent Binomial(n_i, 1/2) variables.
class ConditionalSetup {
 public:
  static ConditionalSetup from_counts(std::vector<std::uint64_t> counts);

  /// Checks p against counts / sum(counts) to 1e-12.
  ConditionalSetup(std::vector<std::uint64_t> counts, std::vector<double> p);

  int length() const noexcept { return length_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  const std::vector<double>& p() const noexcept { return p_; }

  /// prod_i (n_i + 1), saturating at UINT64_MAX.
  std::uint64_t tuple_count() const noexcept;

 private:
  int length_ = 0;
  std::vector<std::uint64_t> counts_;
  std::vector<double> p_;
};

struct PmfAtom {
  double value = 0.0;
  double probability = 0.0;
};

/// Exact law of the estimated market information, atoms sorted by value.
struct ExactPmf {
  std::vector<PmfAtom> atoms;

  double moment(int r) const;
  double mgf(double t) const;
};

double mgf_exact(double t, const ConditionalSetup& setup);
double moment_exact(int r, const ConditionalSetup& setup,
                    std::uint64_t budget = kDefaultTermBudget);
double mean_exact(const ConditionalSetup& setup);
ExactPmf enumerate_pmf(const ConditionalSetup& setup,
                       std::uint64_t budget = kDefaultTermBudget);

}  // namespace mktinfo

#endif  // MKTINFO_EXACT_DIST_HPP_
