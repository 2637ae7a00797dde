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

#ifndef MKTINFO_SYMBOLIC_HPP_
#define MKTINFO_SYMBOLIC_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mktinfo {

using Date = std::chrono::year_month_day;

/// Largest supported pattern length. Tables hold 2^L entries.
inline constexpr int kMaxPatternLength = 16;

/// Timestamped strictly positive prices with strictly increasing dates.
class PriceSeries {
 public:
  /// Throws kDomain when the invariants do not hold and kInputTooShort when
  /// fewer than two prices are given.
  PriceSeries(std::vector<Date> dates, std::vector<double> prices);

  /// Builds a series with synthetic consecutive daily dates starting at
  /// 2000-01-01. Used by simulations and tests that have no calendar.
  static PriceSeries with_daily_dates(std::vector<double> prices);

  std::size_t size() const noexcept { return prices_.size(); }
  const std::vector<Date>& dates() const noexcept { return dates_; }
  const std::vector<double>& prices() const noexcept { return prices_; }

 private:
  std::vector<Date> dates_;
  std::vector<double> prices_;
};

/// Increase indicators X_i in {0,1}.
struct BinarySequence {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }

  /// Parses a string of '0'/'1' characters. Whitespace is ignored.
  static BinarySequence from_string(const std::string& text);
  std::string to_string() const;
};

struct Pattern {
  int length = 0;
  std::vector<std::uint8_t> bits;
  std::size_t index = 0;  // 1-based Gray position
};

/// Sufficient statistic for everything downstream: for each Gray-ordered
/// prefix, how many (L+1)-grams start with it and how many of those end in 1.
struct PatternTable {
  int length = 0;
  std::uint64_t total = 0;  // N, the number of (L+1)-grams
  std::vector<std::uint64_t> prefix_counts;
  std::vector<std::uint64_t> suffix_one_counts;
};

struct EmpiricalProbs {
  std::vector<double> p_hat;
  std::vector<std::optional<double>> pi_hat;  // empty for unobserved prefixes
};

BinarySequence encode_returns(const PriceSeries& series);
BinarySequence encode_returns(std::span<const double> prices);

/// Canonical reflected binary Gray code: position i holds binary(i-1) XOR
/// binary(i-1)>>1, most significant bit first.
Pattern gray_pattern(int length, std::size_t index);
std::size_t gray_index(std::span<const std::uint8_t> bits);

/// Gray position (1-based) of the pattern whose bits, read MSB first, spell
/// `value`.
std::size_t gray_index_of_value(int length, std::uint32_t value);

/// Slides a window of length L+1 with step 1 over `bits`.
PatternTable count_patterns(std::span<const std::uint8_t> bits, int length);
inline PatternTable count_patterns(const BinarySequence& seq, int length) {
  return count_patterns(std::span<const std::uint8_t>(seq.bits), length);
}

EmpiricalProbs empirical_probs(const PatternTable& table);

void validate_pattern_length(int length);

}  // namespace mktinfo

#endif  // MKTINFO_SYMBOLIC_HPP_
