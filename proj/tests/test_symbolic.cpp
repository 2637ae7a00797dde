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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "mktinfo/error.hpp"
#include "mktinfo/information.hpp"
#include "mktinfo/symbolic.hpp"

using namespace mktinfo;

namespace {

std::vector<std::uint8_t> bits_of(std::initializer_list<int> v) {
  return {v.begin(), v.end()};
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an mktinfo::Error");
  return ErrorKind::kUsage;
}

}  // namespace

TEST_CASE("encode_returns maps strict increases to 1") {
  CHECK(encode_returns(std::vector<double>{101.0, 102.0, 101.5}).bits ==
        bits_of({1, 0}));
  CHECK(encode_returns(std::vector<double>{100.0, 100.0}).bits == bits_of({0}));
  CHECK(encode_returns(std::vector<double>{3.0, 2.0, 1.0, 0.5}).bits ==
        bits_of({0, 0, 0}));
  CHECK(kind_of([] { encode_returns(std::vector<double>{1.0}); }) ==
        ErrorKind::kInputTooShort);
}

TEST_CASE("encode_returns: length and mirrored moves") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> step(-2, 2);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> up{100.0};
    std::vector<double> down{100.0};
    for (int i = 0; i < 60; ++i) {
      const int s = step(rng);
      up.push_back(up.back() + s);
      down.push_back(down.back() - s);
    }
    const auto a = encode_returns(up);
    const auto b = encode_returns(down);
    REQUIRE(a.size() == up.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const bool tie = up[i + 1] == up[i];
      CHECK(b.bits[i] == (tie ? 0 : 1 - a.bits[i]));
    }
  }
}

TEST_CASE("PriceSeries rejects invalid input") {
  using namespace std::chrono;
  const Date d1 = year{2021} / 1 / 4;
  const Date d2 = year{2021} / 1 / 5;
  CHECK(kind_of([&] { PriceSeries({d1}, {1.0}); }) == ErrorKind::kInputTooShort);
  CHECK(kind_of([&] { PriceSeries({d1, d2}, {1.0, 0.0}); }) == ErrorKind::kDomain);
  CHECK(kind_of([&] { PriceSeries({d2, d1}, {1.0, 2.0}); }) == ErrorKind::kDomain);
  CHECK(kind_of([&] { PriceSeries({d1, d1}, {1.0, 2.0}); }) == ErrorKind::kDomain);
  CHECK(PriceSeries({d1, d2}, {1.0, 2.0}).size() == 2);
}

TEST_CASE("gray_pattern small cases") {
  CHECK(gray_pattern(1, 1).bits == bits_of({0}));
  CHECK(gray_pattern(1, 2).bits == bits_of({1}));
  const std::vector<std::vector<std::uint8_t>> expected = {
      {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 0},
      {1, 1, 0}, {1, 1, 1}, {1, 0, 1}, {1, 0, 0}};
  for (std::size_t i = 1; i <= 8; ++i) {
    CHECK(gray_pattern(3, i).bits == expected[i - 1]);
  }
  CHECK(gray_index(gray_pattern(4, 11).bits) == 11);
  CHECK(kind_of([] { gray_pattern(3, 0); }) == ErrorKind::kDomain);
  CHECK(kind_of([] { gray_pattern(3, 9); }) == ErrorKind::kDomain);
  CHECK(kind_of([] { gray_pattern(17, 1); }) == ErrorKind::kDomain);
}

TEST_CASE("gray code is a bijection with single-bit steps up to L=16") {
  for (int length = 1; length <= 16; ++length) {
    const std::size_t size = std::size_t{1} << length;
    // Full sweep for small L, strided sample for large L.
    const std::size_t stride = length <= 12 ? 1 : 97;
    for (std::size_t i = 1; i <= size; i += stride) {
      const auto pattern = gray_pattern(length, i);
      REQUIRE(gray_index(pattern.bits) == i);
      if (i == 1) {
        CHECK(std::all_of(pattern.bits.begin(), pattern.bits.end(),
                          [](auto b) { return b == 0; }));
      }
      if (i < size) {
        const auto next = gray_pattern(length, i + 1);
        int diff = 0;
        for (int b = 0; b < length; ++b) diff += pattern.bits[b] != next.bits[b];
        REQUIRE(diff == 1);
      }
    }
  }
}

TEST_CASE("count_patterns on hand-enumerated windows") {
  const auto t = count_patterns(bits_of({0, 1, 1, 0, 1}), 1);
  CHECK(t.total == 4);
  CHECK(t.prefix_counts == std::vector<std::uint64_t>{2, 2});
  CHECK(t.suffix_one_counts == std::vector<std::uint64_t>{2, 1});

  const auto c = count_patterns(bits_of({0, 0, 0, 0}), 1);
  CHECK(c.prefix_counts == std::vector<std::uint64_t>{3, 0});
  CHECK(c.suffix_one_counts == std::vector<std::uint64_t>{0, 0});

  // L=2 on 0,1,1,0,1: windows 011, 110, 101. Prefix 01 is Gray index 2,
  // 11 is 3, 10 is 4.
  const auto l2 = count_patterns(bits_of({0, 1, 1, 0, 1}), 2);
  CHECK(l2.prefix_counts == std::vector<std::uint64_t>{0, 1, 1, 1});
  CHECK(l2.suffix_one_counts == std::vector<std::uint64_t>{0, 1, 0, 1});

  CHECK(kind_of([] { count_patterns(bits_of({0, 1}), 2); }) ==
        ErrorKind::kInputTooShort);
  CHECK(kind_of([] { count_patterns(bits_of({0, 1}), 0); }) == ErrorKind::kDomain);
}

TEST_CASE("count_patterns totals and bounds on random sequences") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t len = 3 + rng() % 600;
    std::vector<std::uint8_t> bits(len);
    for (auto& b : bits) b = rng() & 1U;
    const int length = 1 + static_cast<int>(rng() % 4);
    if (len <= static_cast<std::size_t>(length)) continue;
    const auto t = count_patterns(bits, length);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < t.prefix_counts.size(); ++i) {
      sum += t.prefix_counts[i];
      CHECK(t.suffix_one_counts[i] <= t.prefix_counts[i]);
    }
    CHECK(sum == len - static_cast<std::size_t>(length));
    CHECK(t.total == sum);
  }
  std::vector<std::uint8_t> coin(500);
  for (auto& b : coin) b = rng() & 1U;
  const auto t2 = count_patterns(coin, 2);
  CHECK(t2.total == 498);
}

TEST_CASE("information is invariant under re-indexing of patterns") {
  std::mt19937_64 rng(3);
  std::vector<std::uint8_t> bits(300);
  for (auto& b : bits) b = rng() % 3 == 0;
  const auto table = count_patterns(bits, 3);
  const auto base = estimate_information(table);
  std::vector<std::size_t> perm(table.prefix_counts.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (int rep = 0; rep < 10; ++rep) {
    std::shuffle(perm.begin(), perm.end(), rng);
    PatternTable shuffled = table;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      shuffled.prefix_counts[i] = table.prefix_counts[perm[i]];
      shuffled.suffix_one_counts[i] = table.suffix_one_counts[perm[i]];
    }
    const auto est = estimate_information(shuffled);
    CHECK(est.entropy_full == doctest::Approx(base.entropy_full).epsilon(1e-13));
    CHECK(est.info == doctest::Approx(base.info).epsilon(1e-13));
  }
}

TEST_CASE("empirical_probs") {
  const auto probs = empirical_probs(count_patterns(bits_of({0, 1, 1, 0, 1}), 1));
  CHECK(probs.p_hat == std::vector<double>{0.5, 0.5});
  REQUIRE(probs.pi_hat[0].has_value());
  CHECK(*probs.pi_hat[0] == 1.0);
  CHECK(*probs.pi_hat[1] == 0.5);

  PatternTable unseen{1, 4, {4, 0}, {2, 0}};
  const auto u = empirical_probs(unseen);
  CHECK_FALSE(u.pi_hat[1].has_value());

  PatternTable balanced{1, 4, {2, 2}, {1, 1}};
  const auto b = empirical_probs(balanced);
  CHECK(*b.pi_hat[0] == 0.5);
  CHECK(*b.pi_hat[1] == 0.5);

  PatternTable empty{1, 0, {0, 0}, {0, 0}};
  CHECK(kind_of([&] { empirical_probs(empty); }) == ErrorKind::kEmptyTable);
}

TEST_CASE("BinarySequence string round trip") {
  const auto seq = BinarySequence::from_string("0110 1");
  CHECK(seq.to_string() == "01101");
  CHECK(kind_of([] { BinarySequence::from_string("012"); }) == ErrorKind::kParse);
}
