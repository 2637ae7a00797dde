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

#include "mktinfo/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <vector>

#include "mktinfo/error.hpp"

namespace mktinfo {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Date parse_date(std::string_view text) {
  text = trim(text);
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      !parse_number(text.substr(0, 4), y) ||
      !parse_number(text.substr(5, 2), m) ||
      !parse_number(text.substr(8, 2), d)) {
    throw Error(ErrorKind::kParse,
                "expected a YYYY-MM-DD date, got '" + std::string(text) + "'");
  }
  const Date date{std::chrono::year{y}, std::chrono::month{m},
                  std::chrono::day{d}};
  if (!date.ok()) {
    throw Error(ErrorKind::kParse, "invalid calendar date '" +
                                       std::string(text) + "'");
  }
  return date;
}

std::string format_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()),
                static_cast<unsigned>(date.day()));
  return buf;
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string format_real(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string();
}

PriceSeries read_price_csv(std::istream& in) {
  std::vector<Date> dates;
  std::vector<double> prices;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (row != "date,price") {
        throw Error(ErrorKind::kParse,
                    "line " + std::to_string(line_no) +
                        ": expected header 'date,price'");
      }
      continue;
    }
    const auto comma = row.find(',');
    if (comma == std::string_view::npos ||
        row.find(',', comma + 1) != std::string_view::npos) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                         ": expected two fields");
    }
    Date date;
    try {
      date = parse_date(row.substr(0, comma));
    } catch (const Error& e) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    double price = 0.0;
    if (!parse_number(trim(row.substr(comma + 1)), price) || !(price > 0.0)) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                         ": price must be a positive decimal");
    }
    if (!dates.empty() && !(std::chrono::sys_days(dates.back()) <
                            std::chrono::sys_days(date))) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                         ": dates must be strictly increasing");
    }
    dates.push_back(date);
    prices.push_back(price);
  }
  if (!header_seen) throw Error(ErrorKind::kParse, "empty price file");
  if (prices.size() < 2) {
    throw Error(ErrorKind::kInputTooShort, "price file holds fewer than 2 rows");
  }
  return PriceSeries(std::move(dates), std::move(prices));
}

PriceSeries read_price_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  return read_price_csv(in);
}

}  // namespace mktinfo
