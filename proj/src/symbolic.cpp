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

#include "mktinfo/symbolic.hpp"

#include <cctype>
#include <cmath>

#include "mktinfo/error.hpp"

namespace mktinfo {

void validate_pattern_length(int length) {
  if (length < 1 || length > kMaxPatternLength) {
    throw Error(ErrorKind::kDomain,
                "pattern length must be in [1, " +
                    std::to_string(kMaxPatternLength) + "], got " +
                    std::to_string(length));
  }
}

PriceSeries::PriceSeries(std::vector<Date> dates, std::vector<double> prices)
    : dates_(std::move(dates)), prices_(std::move(prices)) {
  if (dates_.size() != prices_.size()) {
    throw Error(ErrorKind::kDomain, "dates and prices differ in length");
  }
  if (prices_.size() < 2) {
    throw Error(ErrorKind::kInputTooShort,
                "a price series needs at least 2 prices");
  }
  for (std::size_t i = 0; i < prices_.size(); ++i) {
    if (!dates_[i].ok()) {
      throw Error(ErrorKind::kDomain,
                  "invalid date at position " + std::to_string(i));
    }
    if (!(prices_[i] > 0.0) || !std::isfinite(prices_[i])) {
      throw Error(ErrorKind::kDomain,
                  "price at position " + std::to_string(i) +
                      " is not strictly positive");
    }
    if (i > 0 && !(std::chrono::sys_days(dates_[i - 1]) <
                   std::chrono::sys_days(dates_[i]))) {
      throw Error(ErrorKind::kDomain,
                  "dates are not strictly increasing at position " +
                      std::to_string(i));
    }
  }
}

PriceSeries PriceSeries::with_daily_dates(std::vector<double> prices) {
  using namespace std::chrono;
  std::vector<Date> dates;
  dates.reserve(prices.size());
  const sys_days start = sys_days(year{2000} / January / 1);
  for (std::size_t i = 0; i < prices.size(); ++i) {
    dates.emplace_back(start + days(static_cast<int>(i)));
  }
  return PriceSeries(std::move(dates), std::move(prices));
}

BinarySequence BinarySequence::from_string(const std::string& text) {
  BinarySequence seq;
  for (char c : text) {
    if (c == '0' || c == '1') {
      seq.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::kParse,
                  std::string("bit strings may only contain 0 and 1, got '") +
                      c + "'");
    }
  }
  return seq;
}

std::string BinarySequence::to_string() const {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BinarySequence encode_returns(std::span<const double> prices) {
  if (prices.size() < 2) {
    throw Error(ErrorKind::kInputTooShort,
                "at least 2 prices are needed to form a return");
  }
  BinarySequence seq;
  seq.bits.reserve(prices.size() - 1);
  for (std::size_t i = 1; i < prices.size(); ++i) {
    // Strict inequality: a tie encodes to 0.
    seq.bits.push_back(prices[i] - prices[i - 1] > 0.0 ? 1 : 0);
  }
  return seq;
}

BinarySequence encode_returns(const PriceSeries& series) {
  return encode_returns(std::span<const double>(series.prices()));
}

Pattern gray_pattern(int length, std::size_t index) {
  validate_pattern_length(length);
  const std::size_t count = std::size_t{1} << length;
  if (index < 1 || index > count) {
    throw Error(ErrorKind::kDomain, "Gray index " + std::to_string(index) +
                                        " outside [1, " +
                                        std::to_string(count) + "]");
  }
  const std::size_t rank = index - 1;
  const std::size_t code = rank ^ (rank >> 1);
  Pattern pattern;
  pattern.length = length;
  pattern.index = index;
  pattern.bits.resize(static_cast<std::size_t>(length));
  for (int b = 0; b < length; ++b) {
    pattern.bits[static_cast<std::size_t>(b)] =
        static_cast<std::uint8_t>((code >> (length - 1 - b)) & 1U);
  }
  return pattern;
}

std::size_t gray_index_of_value(int length, std::uint32_t value) {
  // Inverse Gray: prefix XOR over the shifted code.
  std::uint32_t rank = value;
  for (int shift = 1; shift < length; shift <<= 1) rank ^= rank >> shift;
  return static_cast<std::size_t>(rank) + 1;
}

std::size_t gray_index(std::span<const std::uint8_t> bits) {
  const int length = static_cast<int>(bits.size());
  validate_pattern_length(length);
  std::uint32_t value = 0;
  for (auto b : bits) {
    if (b > 1) throw Error(ErrorKind::kDomain, "pattern bits must be 0 or 1");
    value = (value << 1) | b;
  }
  return gray_index_of_value(length, value);
}

PatternTable count_patterns(std::span<const std::uint8_t> bits, int length) {
  validate_pattern_length(length);
  const auto l = static_cast<std::size_t>(length);
  if (bits.size() <= l) {
    throw Error(ErrorKind::kInputTooShort,
                "need more than " + std::to_string(length) +
                    " bits to form an (L+1)-gram, got " +
                    std::to_string(bits.size()));
  }
  const std::size_t size = std::size_t{1} << length;
  std::vector<std::size_t> slot(size);
  for (std::uint32_t v = 0; v < size; ++v) {
    slot[v] = gray_index_of_value(length, v) - 1;
  }

  PatternTable table;
  table.length = length;
  table.total = bits.size() - l;
  table.prefix_counts.assign(size, 0);
  table.suffix_one_counts.assign(size, 0);

  const std::uint32_t mask = static_cast<std::uint32_t>(size - 1);
  std::uint32_t prefix = 0;
  for (std::size_t i = 0; i < l; ++i) prefix = (prefix << 1) | bits[i];
  for (std::size_t end = l; end < bits.size(); ++end) {
    const std::size_t s = slot[prefix & mask];
    ++table.prefix_counts[s];
    table.suffix_one_counts[s] += bits[end];
    prefix = ((prefix << 1) | bits[end]) & mask;
  }
  return table;
}

EmpiricalProbs empirical_probs(const PatternTable& table) {
  if (table.total == 0) {
    throw Error(ErrorKind::kEmptyTable, "pattern table holds no (L+1)-grams");
  }
  EmpiricalProbs out;
  const auto n = static_cast<double>(table.total);
  out.p_hat.reserve(table.prefix_counts.size());
  out.pi_hat.reserve(table.prefix_counts.size());
  for (std::size_t i = 0; i < table.prefix_counts.size(); ++i) {
    const auto count = table.prefix_counts[i];
    out.p_hat.push_back(static_cast<double>(count) / n);
    if (count > 0) {
      out.pi_hat.emplace_back(static_cast<double>(table.suffix_one_counts[i]) /
                              static_cast<double>(count));
    } else {
      out.pi_hat.emplace_back(std::nullopt);
    }
  }
  return out;
}

}  // namespace mktinfo
