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

#include "mktinfo/exact_dist.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "mktinfo/error.hpp"
#include "mktinfo/information.hpp"
#include "mktinfo/symbolic.hpp"

namespace mktinfo {
namespace {

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// log of C(n, j) 2^{-n}.
double log_binomial_half(std::uint64_t n, std::uint64_t j) {
  const auto nd = static_cast<double>(n);
  const auto jd = static_cast<double>(j);
  return std::lgamma(nd + 1.0) - std::lgamma(jd + 1.0) -
         std::lgamma(nd - jd + 1.0) - nd * std::numbers::ln2;
}

// x log2 x + (1-x) log2 (1-x) at x = j/n, with 0 log 0 = 0 by branching.
double neg_binary_entropy(std::uint64_t j, std::uint64_t n) {
  if (j == 0 || j == n) return 0.0;
  const double x = static_cast<double>(j) / static_cast<double>(n);
  return x * std::log2(x) + (1.0 - x) * std::log2(1.0 - x);
}

void check_budget(const ConditionalSetup& setup, std::uint64_t budget) {
  const std::uint64_t cost = setup.tuple_count();
  if (cost > budget) {
    throw Error(ErrorKind::kBudgetExceeded,
                "nested sum needs " + std::to_string(cost) +
                    " terms, budget is " + std::to_string(budget));
  }
}

// Visits every suffix-count tuple j (0 <= j_i <= n_i) in lexicographic order,
// passing the tuple and its probability prod_i C(n_i, j_i) 2^{-n_i}.
template <typename Visitor>
void for_each_tuple(const ConditionalSetup& setup, Visitor&& visit) {
  const auto& counts = setup.counts();
  const std::size_t m = counts.size();
  std::vector<std::vector<double>> weights(m);
  for (std::size_t i = 0; i < m; ++i) {
    weights[i].resize(counts[i] + 1);
    for (std::uint64_t j = 0; j <= counts[i]; ++j) {
      weights[i][j] = std::exp(log_binomial_half(counts[i], j));
    }
  }
  std::vector<std::uint64_t> j(m, 0);
  while (true) {
    double w = 1.0;
    for (std::size_t i = 0; i < m; ++i) w *= weights[i][j[i]];
    visit(std::span<const std::uint64_t>(j), w);
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (j[pos] < counts[pos]) {
        ++j[pos];
        break;
      }
      j[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace

ConditionalSetup ConditionalSetup::from_counts(
    std::vector<std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  std::vector<double> p;
  p.reserve(counts.size());
  for (auto c : counts) {
    p.push_back(total == 0 ? 0.0
                           : static_cast<double>(c) / static_cast<double>(total));
  }
  return ConditionalSetup(std::move(counts), std::move(p));
}

ConditionalSetup::ConditionalSetup(std::vector<std::uint64_t> counts,
                                   std::vector<double> p)
    : counts_(std::move(counts)), p_(std::move(p)) {
  const std::size_t m = counts_.size();
  if (m < 2 || !std::has_single_bit(m)) {
    throw Error(ErrorKind::kDomain,
                "setup needs 2^L prefix counts, got " + std::to_string(m));
  }
  length_ = std::countr_zero(m);
  validate_pattern_length(length_);
  if (p_.size() != m) {
    throw Error(ErrorKind::kInconsistency,
                "prefix probabilities and counts differ in length");
  }
  std::uint64_t total = 0;
  for (auto c : counts_) total += c;
  if (total == 0) {
    throw Error(ErrorKind::kEmptyTable, "setup has no observations");
  }
  for (std::size_t i = 0; i < m; ++i) {
    const double expected =
        static_cast<double>(counts_[i]) / static_cast<double>(total);
    if (std::abs(p_[i] - expected) > 1e-12) {
      throw Error(ErrorKind::kInconsistency,
                  "p_" + std::to_string(i + 1) +
                      " differs from n_i / sum(n); the conditioning event "
                      "requires empirical prefix frequencies");
    }
  }
}

std::uint64_t ConditionalSetup::tuple_count() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t cost = 1;
  for (auto c : counts_) {
    if (c + 1 > kMax / cost) return kMax;
    cost *= c + 1;
  }
  return cost;
}

double ExactPmf::moment(int r) const {
  CompensatedSum acc;
  for (const auto& atom : atoms) {
    acc.add(std::pow(atom.value, r) * atom.probability);
  }
  return acc.value();
}

double ExactPmf::mgf(double t) const {
  CompensatedSum acc;
  for (const auto& atom : atoms) {
    acc.add(std::exp(t * atom.value) * atom.probability);
  }
  return acc.value();
}

double mgf_exact(double t, const ConditionalSetup& setup) {
  // e^t prod_i sum_j C_{i,j}(t), with
  //   C_{i,j}(t) = C(n_i, j) 2^{-n_i} (j/n_i)^{t p_i (j/n_i) / ln 2}
  //                                   (1 - j/n_i)^{t p_i (1 - j/n_i) / ln 2},
  // evaluated as exp(log C(n_i,j) 2^{-n_i} + t p_i h(j/n_i)) so the boundary
  // factors at j in {0, n_i} are exactly 1.
  double log_m = t;
  for (std::size_t i = 0; i < setup.counts().size(); ++i) {
    const auto n = setup.counts()[i];
    if (n == 0) continue;
    const double p = setup.p()[i];
    std::vector<double> logs(n + 1);
    double peak = -std::numeric_limits<double>::infinity();
    for (std::uint64_t j = 0; j <= n; ++j) {
      logs[j] = log_binomial_half(n, j) + t * p * neg_binary_entropy(j, n);
      peak = std::max(peak, logs[j]);
    }
    CompensatedSum acc;
    for (double v : logs) acc.add(std::exp(v - peak));
    log_m += peak + std::log(acc.value());
  }
  if (!std::isfinite(log_m) || log_m > std::log(std::numeric_limits<double>::max())) {
    throw Error(ErrorKind::kRange, "moment-generating function overflows at t = " +
                                       std::to_string(t) + " (log M = " +
                                       std::to_string(log_m) + ")");
  }
  return std::exp(log_m);
}

double moment_exact(int r, const ConditionalSetup& setup, std::uint64_t budget) {
  if (r < 0) throw Error(ErrorKind::kDomain, "moment order must be >= 0");
  if (r == 0) return 1.0;
  check_budget(setup, budget);
  const auto& counts = setup.counts();
  const auto& p = setup.p();

  // E[(1 + alpha)^r] = sum_m C(r, m) E[alpha^m], with
  // alpha = sum_k p_k (x_k log2 x_k + (1 - x_k) log2 (1 - x_k)), x_k = j_k/n_k.
  std::vector<CompensatedSum> powers(static_cast<std::size_t>(r) + 1);
  for_each_tuple(setup, [&](std::span<const std::uint64_t> j, double w) {
    double alpha = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      alpha += p[k] * neg_binary_entropy(j[k], counts[k]);
    }
    double a = 1.0;
    for (int m = 0; m <= r; ++m) {
      powers[static_cast<std::size_t>(m)].add(a * w);
      a *= alpha;
    }
  });
  CompensatedSum total;
  double binom = 1.0;
  for (int m = 0; m <= r; ++m) {
    total.add(binom * powers[static_cast<std::size_t>(m)].value());
    binom = binom * (r - m) / (m + 1);
  }
  return total.value();
}

double mean_exact(const ConditionalSetup& setup) {
  // 1 + sum_i p_i 2^{1 - n_i} sum_j C(n_i, j) (j/n_i) log2(j/n_i)
  CompensatedSum acc;
  acc.add(1.0);
  for (std::size_t i = 0; i < setup.counts().size(); ++i) {
    const auto n = setup.counts()[i];
    if (n == 0) continue;
    CompensatedSum inner;
    for (std::uint64_t j = 1; j < n; ++j) {
      const double x = static_cast<double>(j) / static_cast<double>(n);
      inner.add(std::exp(log_binomial_half(n, j) + std::numbers::ln2) * x *
                std::log2(x));
    }
    acc.add(setup.p()[i] * inner.value());
  }
  return acc.value();
}

ExactPmf enumerate_pmf(const ConditionalSetup& setup, std::uint64_t budget) {
  check_budget(setup, budget);
  const auto& counts = setup.counts();
  const std::vector<double>& p = setup.p();
  std::vector<PmfAtom> raw;
  raw.reserve(setup.tuple_count());
  std::vector<std::optional<double>> pi(counts.size());
  const double h_star = entropy_star(p);
  for_each_tuple(setup, [&](std::span<const std::uint64_t> j, double w) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      pi[i] = counts[i] == 0 ? std::nullopt
                             : std::optional<double>(
                                   static_cast<double>(j[i]) /
                                   static_cast<double>(counts[i]));
    }
    // Defining route: H_star - H_full, independent of the nested alpha sum.
    raw.push_back({h_star - entropy_full(p, pi), w});
  });

  std::sort(raw.begin(), raw.end(),
            [](const PmfAtom& a, const PmfAtom& b) { return a.value < b.value; });
  ExactPmf pmf;
  for (const auto& atom : raw) {
    if (!pmf.atoms.empty() &&
        atom.value - pmf.atoms.back().value <= 1e-12) {
      pmf.atoms.back().probability += atom.probability;
    } else {
      pmf.atoms.push_back(atom);
    }
  }
  for (auto& atom : pmf.atoms) atom.value = std::max(atom.value, 0.0);
  return pmf;
}

}  // namespace mktinfo
