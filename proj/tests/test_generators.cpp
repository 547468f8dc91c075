// Copyright 2026 The Wesketch Authors.
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

#include <cmath>
#include <cstdio>
#include <fstream>

#include <doctest.h>

#include "wesketch/generators.hpp"
#include "wesketch/oracle.hpp"

using namespace wesketch;

namespace {
std::string temp_path(const char* name) {
  return std::string("/tmp/wesketch_test_") + name;
}
}  // namespace

TEST_CASE("lowerbound pair has the exact moment gap") {
  for (std::uint64_t n : {std::uint64_t{256}, std::uint64_t{4096}}) {
    for (double p : {1.0, 2.0, 3.0}) {
      auto [s1, s2] = gen_lowerbound_pair(n, p, 17);
      REQUIRE(s1.m() == n);
      REQUIRE(s2.m() == n);
      const std::uint64_t b = rounded_root(n, p);
      const FrequencyOracle o1(s1), o2(s2);
      const long double expected =
          static_cast<long double>(n - b) +
          powl(static_cast<long double>(b), static_cast<long double>(p));
      CHECK(static_cast<double>(o1.exact_fp(p)) ==
            doctest::Approx(static_cast<double>(expected)));
      CHECK(static_cast<double>(o2.exact_fp(p)) ==
            doctest::Approx(static_cast<double>(n)));
    }
  }
}

TEST_CASE("lowerbound at p=1 degenerates to one repeated item") {
  auto [s1, s2] = gen_lowerbound_pair(16, 1.0, 3);
  const FrequencyOracle o1(s1);
  CHECK(o1.distinct() == 1);
  CHECK(o1.frequency(s1.items[0]) == 16);
  CHECK(s2.m() == 16);
}

TEST_CASE("lowerbound rejects tiny universes") {
  CHECK_THROWS_AS(gen_lowerbound_pair(3, 2.0, 1), std::invalid_argument);
}

TEST_CASE("generators are deterministic under the seed") {
  const Stream a = gen_zipf(1 << 10, 5000, 1.1, 7);
  const Stream b = gen_zipf(1 << 10, 5000, 1.1, 7);
  const Stream c = gen_zipf(1 << 10, 5000, 1.1, 8);
  CHECK(a == b);
  CHECK_FALSE(a == c);

  auto p1 = gen_lowerbound_pair(256, 2.0, 5);
  auto p2 = gen_lowerbound_pair(256, 2.0, 5);
  CHECK(p1.first == p2.first);
  CHECK(p1.second == p2.second);
}

TEST_CASE("planted heavy hitter has the prescribed frequency") {
  const std::uint64_t n = 1 << 12;
  const double p = 2.0, eps = 0.5;
  const Stream s = gen_planted_hh(n, p, eps, 11);
  REQUIRE(s.m() == n);
  const FrequencyOracle oracle(s);
  const std::uint64_t expected = static_cast<std::uint64_t>(
      std::ceil(eps * std::pow(static_cast<double>(n), 1.0 / p)));
  const std::uint64_t top = oracle.top_item();
  CHECK(oracle.frequency(top) == expected);
  for (const auto& [item, count] : oracle.counts())
    if (item != top) CHECK(count == 1);
}

TEST_CASE("pseudoheavy stream matches its frequency profile") {
  const std::uint64_t n = std::uint64_t{1} << 16;  // w = 4
  const Stream s = gen_pseudoheavy(n, 23);
  REQUIRE(s.m() == n);
  const FrequencyOracle oracle(s);

  const std::uint64_t sqrt_n = 256, q4 = 16;
  std::uint64_t heavy_items = 0, pseudo_items = 0, light_items = 0;
  for (const auto& [item, count] : oracle.counts()) {
    if (count == sqrt_n)
      ++heavy_items;
    else if (count == q4)
      ++pseudo_items;
    else if (count == 1)
      ++light_items;
    else
      FAIL("unexpected frequency ", count);
  }
  CHECK(heavy_items == 1);
  CHECK(pseudo_items == sqrt_n);

  // Exact second moment: heavy n + pseudo n + one per light.
  const long double f2 = oracle.exact_fp(2.0);
  const long double expected =
      static_cast<long double>(n) + static_cast<long double>(n) +
      static_cast<long double>(light_items);
  CHECK(static_cast<double>(f2) == doctest::Approx(static_cast<double>(expected)));
  CHECK(f2 >= static_cast<long double>(n));
  CHECK(f2 <= 4.0L * static_cast<long double>(n));

  CHECK_THROWS_AS(gen_pseudoheavy(1000, 1), std::invalid_argument);
}

TEST_CASE("zipf exponent zero is uniform within sampling noise") {
  const std::uint64_t n = 64;
  const std::uint64_t m = 64000;
  const Stream s = gen_zipf(n, m, 0.0, 13);
  const FrequencyOracle oracle(s);
  const double mean = static_cast<double>(m) / static_cast<double>(n);
  const double sigma = std::sqrt(mean);
  for (const auto& [item, count] : oracle.counts())
    CHECK(std::fabs(static_cast<double>(count) - mean) < 4.5 * sigma);
}

TEST_CASE("zipf rank-1 frequency tracks the analytic normalizer") {
  const std::uint64_t n = 1 << 14;
  const std::uint64_t m = 1 << 17;
  const double s_exp = 1.1;
  const Stream s = gen_zipf(n, m, s_exp, 29);
  const FrequencyOracle oracle(s);

  long double normalizer = 0.0L;
  for (std::uint64_t i = 1; i <= n; ++i)
    normalizer += powl(static_cast<long double>(i), -1.1L);
  const double expected = static_cast<double>(m) / static_cast<double>(normalizer);
  const double actual = static_cast<double>(oracle.frequency(1));
  CHECK(std::fabs(actual - expected) / expected < 0.10);
}

TEST_CASE("stream file round trip is the identity") {
  const std::string path = temp_path("roundtrip");
  auto [s1, s2] = gen_lowerbound_pair(512, 2.0, 41);
  write_stream(path, s1);
  CHECK(read_stream(path) == s1);
  write_stream(path, s2);
  CHECK(read_stream(path) == s2);
  std::remove(path.c_str());
}

TEST_CASE("empty body with a valid header reads an empty stream") {
  const std::string path = temp_path("empty");
  {
    std::ofstream f(path);
    f << "n=4 m=0\n";
  }
  const Stream s = read_stream(path);
  CHECK(s.n == 4);
  CHECK(s.m() == 0);
  std::remove(path.c_str());
}

TEST_CASE("malformed stream files raise distinct errors") {
  const std::string path = temp_path("bad");

  {
    std::ofstream f(path);
    f << "items=4 m=0\n";
  }
  CHECK_THROWS_WITH_AS(read_stream(path), doctest::Contains("bad header"),
                       StreamIoError);
  try {
    read_stream(path);
  } catch (const StreamIoError& e) {
    CHECK(e.kind == StreamIoError::Kind::kMalformedHeader);
  }

  {
    std::ofstream f(path);
    f << "n=4 m=2\n0\n1\n";  // items are 1-based
  }
  try {
    read_stream(path);
    FAIL("expected out-of-range error");
  } catch (const StreamIoError& e) {
    CHECK(e.kind == StreamIoError::Kind::kItemOutOfRange);
  }

  {
    std::ofstream f(path);
    f << "n=4 m=3\n1\n2\n";  // one item short
  }
  try {
    read_stream(path);
    FAIL("expected truncation error");
  } catch (const StreamIoError& e) {
    CHECK(e.kind == StreamIoError::Kind::kTruncated);
  }

  {
    std::ofstream f(path);
    f << "n=4 m=1\npotato\n";
  }
  try {
    read_stream(path);
    FAIL("expected malformed item error");
  } catch (const StreamIoError& e) {
    CHECK(e.kind == StreamIoError::Kind::kMalformedItem);
  }
  std::remove(path.c_str());
}
