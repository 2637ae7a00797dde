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

#include "mktinfo/rolling.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <span>
#include <thread>

#include "mktinfo/asymptotic.hpp"
#include "mktinfo/efficiency_test.hpp"
#include "mktinfo/error.hpp"
#include "mktinfo/information.hpp"
#include "mktinfo/io.hpp"

namespace mktinfo {
namespace {

double significance(double level) {
  return std::round((1.0 - level) * 1e12) / 1e12;
}

const char* to_string(RowStatus status) {
  return status == RowStatus::kOk ? "ok" : "unobserved_prefix";
}

}  // namespace

void RollingConfig::validate() const {
  validate_pattern_length(length);
  if (window < static_cast<std::size_t>(length) + 1) {
    throw Error(ErrorKind::kDomain, "window must hold at least L + 1 returns");
  }
  if (step < 1) throw Error(ErrorKind::kDomain, "step must be positive");
  if (levels.empty()) throw Error(ErrorKind::kDomain, "no confidence levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > 0.0 && levels[i] < 1.0)) {
      throw Error(ErrorKind::kDomain, "confidence levels must lie in (0, 1)");
    }
    if (i > 0 && !(levels[i] > levels[i - 1])) {
      throw Error(ErrorKind::kDomain,
                  "confidence levels must be strictly increasing");
    }
  }
}

std::string level_label(double level) {
  std::string label = format_real(level * 100.0);
  label.erase(std::remove(label.begin(), label.end(), '.'), label.end());
  return label;
}

RollingResult run_roll(const PriceSeries& series, const RollingConfig& config) {
  config.validate();
  if (series.size() < config.window + 1) {
    throw Error(ErrorKind::kInputTooShort,
                "need at least window + 1 = " + std::to_string(config.window + 1) +
                    " prices, got " + std::to_string(series.size()));
  }
  const auto bits = encode_returns(series);
  const GammaParams params = gamma_params(
      config.length, config.window - static_cast<std::size_t>(config.length));
  std::vector<double> critical;
  for (double level : config.levels) {
    critical.push_back(critical_value(significance(level), params));
  }

  // Row r ends at price index window + r * step; its window is the `window`
  // bits just before that price, inclusive.
  const std::size_t count = (series.size() - 1 - config.window) / config.step + 1;
  RollingResult result;
  result.rows.resize(count);

  auto compute = [&](std::size_t r) {
    const std::size_t end_price = config.window + r * config.step;
    const std::span<const std::uint8_t> window(
        bits.bits.data() + (end_price - config.window), config.window);
    RollingRow row;
    row.date = series.dates()[end_price];
    row.critical = critical;
    auto estimate = estimate_information(count_patterns(window, config.length));
    row.info = estimate.info;
    try {
      row.p_value = test_estimate(std::move(estimate)).p_value;
      for (double level : config.levels) {
        row.reject.emplace_back(*row.p_value < significance(level));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kUnobservedPrefix) throw;
      row.status = RowStatus::kUnobservedPrefix;
      row.reject.assign(config.levels.size(), std::nullopt);
    }
    result.rows[r] = std::move(row);
  };

  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(config.workers, 1, count));
  if (workers == 1) {
    for (std::size_t r = 0; r < count; ++r) compute(r);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t r = w; r < count; r += workers) compute(r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  auto& summary = result.summary;
  summary.levels = config.levels;
  summary.rows = count;
  std::vector<std::size_t> rejected(config.levels.size(), 0);
  for (const auto& row : result.rows) {
    if (row.status != RowStatus::kOk) continue;
    ++summary.tested_rows;
    for (std::size_t k = 0; k < rejected.size(); ++k) {
      if (*row.reject[k]) ++rejected[k];
    }
  }
  for (auto n : rejected) {
    summary.rejected_fraction.push_back(
        summary.tested_rows == 0
            ? 0.0
            : static_cast<double>(n) / static_cast<double>(summary.tested_rows));
  }
  return result;
}

void write_rolling_csv(std::ostream& out, const RollingResult& result,
                       const RollingConfig& config) {
  out << "date,info,p_value";
  for (double level : config.levels) out << ",crit" << level_label(level);
  for (double level : config.levels) out << ",reject" << level_label(level);
  out << ",status\n";
  for (const auto& row : result.rows) {
    out << format_date(row.date) << ',' << format_real(row.info) << ','
        << format_real(row.p_value);
    for (double c : row.critical) out << ',' << format_real(c);
    for (const auto& flag : row.reject) {
      out << ',';
      if (flag) out << (*flag ? '1' : '0');
    }
    out << ',' << to_string(row.status) << '\n';
  }
}

void write_rolling_summary(std::ostream& out, const RollingResult& result) {
  const auto& s = result.summary;
  out << "level,rejected_fraction,tested_rows,rows\n";
  for (std::size_t k = 0; k < s.levels.size(); ++k) {
    out << format_real(s.levels[k]) << ',' << format_real(s.rejected_fraction[k])
        << ',' << s.tested_rows << ',' << s.rows << '\n';
  }
}

}  // namespace mktinfo
