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

#ifndef MKTINFO_IO_HPP_
#define MKTINFO_IO_HPP_

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "mktinfo/symbolic.hpp"

namespace mktinfo {

/// Reads a `date,price` CSV with ISO-8601 dates (YYYY-MM-DD) sorted
/// ascending. Errors carry the 1-based line number.
PriceSeries read_price_csv(std::istream& in);
PriceSeries read_price_csv_file(const std::string& path);

Date parse_date(std::string_view text);
std::string format_date(const Date& date);

/// Real formatted at 10 significant digits.
std::string format_real(double value);
std::string format_real(const std::optional<double>& value);

}  // namespace mktinfo

#endif  // MKTINFO_IO_HPP_
