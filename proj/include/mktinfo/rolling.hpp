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

#ifndef MKTINFO_ROLLING_HPP_
#define MKTINFO_ROLLING_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mktinfo/symbolic.hpp"

namespace mktinfo {

struct RollingConfig {
  std::size_t window = 100;  // returns per window
  int length = 1;
  std::vector<double> levels = {0.95, 0.99, 0.999};
  std::size_t step = 1;
  unsigned workers = 1;

  void validate() const;
};

enum class RowStatus { kOk, kUnobservedPrefix };

struct RollingRow {
  Date date;
  double info = 0.0;
  std::optional<double> p_value;
  std::vector<double> critical;             // one per level
  std::vector<std::optional<bool>> reject;  // empty when p_value is
  RowStatus status = RowStatus::kOk;
};

struct RollingSummary {
  std::vector<double> levels;
  std::vector<double> rejected_fraction;
  std::size_t rows = 0;
  std::size_t tested_rows = 0;
};

struct RollingResult {
  std::vector<RollingRow> rows;
  RollingSummary summary;
};

/// Tests the last `window` returns ending at each date, from the
/// (window+1)-th price onward, advancing `step` rows at a time.
RollingResult run_roll(const PriceSeries& series, const RollingConfig& config);

/// Column suffix for a level: 0.95 -> "95", 0.999 -> "999".
std::string level_label(double level);

void write_rolling_csv(std::ostream& out, const RollingResult& result,
                       const RollingConfig& config);
void write_rolling_summary(std::ostream& out, const RollingResult& result);

}  // namespace mktinfo

#endif  // MKTINFO_ROLLING_HPP_
