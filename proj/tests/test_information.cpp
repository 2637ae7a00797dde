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

#include <cmath>
#include <optional>
#include <random>

#include "mktinfo/error.hpp"
#include "mktinfo/information.hpp"

using namespace mktinfo;

namespace {

using Opt = std::optional<double>;

std::vector<std::uint8_t> repeat(std::initializer_list<int> period,
                                 std::size_t length) {
  std::vector<std::uint8_t> out;
  while (out.size() < length) {
    for (int b : period) {
      if (out.size() == length) break;
      out.push_back(static_cast<std::uint8_t>(b));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("shannon_entropy") {
  CHECK(shannon_entropy(std::vector<double>(8, 0.125)) == doctest::Approx(3.0));
  CHECK(shannon_entropy(std::vector<double>{1, 0, 0, 0}) == 0.0);
  CHECK(shannon_entropy(std::vector<double>{0.5, 0.25, 0.25}) == doctest::Approx(1.5));
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{0.5, 0.6}), Error);
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{1.2, -0.2}), Error);
}

TEST_CASE("entropy_full") {
  CHECK(entropy_full(std::vector<double>{0.5, 0.5}, std::vector<Opt>{0.5, 0.5}) ==
        doctest::Approx(2.0));
  CHECK(entropy_full(std::vector<double>{0.5, 0.5}, std::vector<Opt>{1.0, 0.0}) ==
        doctest::Approx(1.0));
  CHECK(entropy_full(std::vector<double>{1.0, 0.0},
                     std::vector<Opt>{1.0, std::nullopt}) == 0.0);
  try {
    entropy_full(std::vector<double>{0.5, 0.5}, std::vector<Opt>{0.5, std::nullopt});
    FAIL("expected an inconsistency error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInconsistency);
  }
}

TEST_CASE("entropy_star") {
  CHECK(entropy_star(std::vector<double>{0.5, 0.5}) == doctest::Approx(2.0));
  CHECK(entropy_star(std::vector<double>{1.0, 0.0}) == 1.0);
  CHECK(entropy_star(std::vector<double>{0.5, 0.25, 0.25, 0.0}) ==
        doctest::Approx(2.5));
}

TEST_CASE("market_information") {
  CHECK(market_information(std::vector<double>{0.3, 0.7},
                           std::vector<Opt>{0.5, 0.5}) == 0.0);
  CHECK(market_information(std::vector<double>{0.5, 0.5},
                           std::vector<Opt>{1.0, 0.0}) == doctest::Approx(1.0));
  CHECK(market_information(std::vector<double>{0.5, 0.5},
                           std::vector<Opt>{0.6, 0.6}) ==
        doctest::Approx(0.02904940554533136).epsilon(1e-12));
}

TEST_CASE("estimate_information on periodic sequences") {
  const auto alternating = estimate_information(
      BinarySequence{repeat({0, 1}, 101)}, 1);
  CHECK(alternating.total == 100);
  CHECK(alternating.info == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(*alternating.pi_hat[0] == 1.0);
  CHECK(*alternating.pi_hat[1] == 0.0);

  const auto period4 = estimate_information(
      BinarySequence{repeat({0, 0, 1, 1}, 101)}, 1);
  CHECK(period4.info == 0.0);

  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 100; ++rep) {
    BinarySequence bits;
    bits.bits.resize(2 + rng() % 200);
    for (auto& b : bits.bits) b = rng() & 1U;
    const auto est = estimate_information(bits, 1);
    CHECK(est.info >= 0.0);
    CHECK(est.info <= 1.0);
    CHECK(est.info == doctest::Approx(est.entropy_star - est.entropy_full).epsilon(1e-12));
  }
}

TEST_CASE("property: information bounds and the efficient-market identity") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 2000; ++rep) {
    const std::size_t size = std::size_t{2} << (rep % 3);
    std::vector<double> p(size);
    double total = 0.0;
    for (auto& x : p) {
      x = rep % 5 == 0 && u(rng) < 0.3 ? 0.0 : u(rng);
      total += x;
    }
    if (total == 0.0) continue;
    for (auto& x : p) x /= total;
    std::vector<Opt> pi(size);
    std::vector<Opt> half(size, 0.5);
    for (std::size_t i = 0; i < size; ++i) {
      if (p[i] > 0.0) pi[i] = rep % 7 == 0 ? std::round(u(rng)) : u(rng);
    }
    const double info = market_information(p, pi);
    CHECK(info >= -1e-12);
    CHECK(info <= 1.0 + 1e-12);
    CHECK(std::abs(info - (entropy_star(p) - entropy_full(p, pi))) < 1e-12);
    CHECK(std::abs(entropy_star(p) - entropy_full(p, half)) < 1e-12);

    // Permuting (p, pi) together leaves the information unchanged.
    std::vector<std::size_t> perm(size);
    for (std::size_t i = 0; i < size; ++i) perm[i] = (i * 3 + 1) % size;
    std::vector<double> pp(size);
    std::vector<Opt> ppi(size);
    for (std::size_t i = 0; i < size; ++i) {
      pp[i] = p[perm[i]];
      ppi[i] = pi[perm[i]];
    }
    CHECK(std::abs(market_information(pp, ppi) - info) < 1e-12);
  }
}
