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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "wesketch/stream.hpp"

namespace wesketch {

enum class StreamKind {
  kPermutation,
  kZipf,
  kPlantedHh,
  kLowerboundS1,
  kLowerboundS2,
  kPseudoheavy,
};

// Declarative stream description; regeneration from the same spec is
// bit-identical.
struct StreamSpec {
  StreamKind kind = StreamKind::kPermutation;
  std::uint64_t n = 0;
  std::uint64_t m = 0;     // used by zipf; other kinds fix m from n
  double p = 2.0;          // moment order for the block-length constructions
  double zipf_s = 1.1;     // zipf exponent
  double eps = 0.5;        // planted heavy-hitter threshold
  std::uint64_t seed = 0;
};

struct StreamIoError : std::runtime_error {
  enum class Kind { kMalformedHeader, kMalformedItem, kItemOutOfRange, kTruncated };
  StreamIoError(Kind k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
  Kind kind;
};

// Nearest-integer rounding of n^(1/p); the block length unit for the
// hard-instance constructions.
std::uint64_t rounded_root(std::uint64_t n, double p);

Stream gen_permutation(std::uint64_t n, std::uint64_t seed);

// Two length-n streams that agree in shape but differ in one contiguous
// block: S1 repeats one random item b = round(n^(1/p)) times inside a
// uniformly placed block and fills the rest with distinct singletons, so
// F_p(S1) = (n-b) + b^p; S2 is a random permutation with F_p(S2) = n.
std::pair<Stream, Stream> gen_lowerbound_pair(std::uint64_t n, double p,
                                              std::uint64_t seed);

// S1 with block length ceil(eps * n^(1/p)); every other item appears once.
Stream gen_planted_hh(std::uint64_t n, double p, double eps,
                      std::uint64_t seed);

// sqrt(n) blocks of sqrt(n) updates: n^(1/4) special blocks of pseudo-heavy
// items (frequency n^(1/4) each), each followed by n^(1/8) blocks carrying
// n^(1/8) spread-out instances of the single heavy item (total frequency
// sqrt(n)) padded with fresh singletons; all other blocks are fresh
// singletons. Requires n to be a perfect 8th power.
Stream gen_pseudoheavy(std::uint64_t n, std::uint64_t seed);

// m i.i.d. Zipf(s) draws over [n] via inverse CDF on the exact finite
// normalizer.
Stream gen_zipf(std::uint64_t n, std::uint64_t m, double s, std::uint64_t seed);

Stream generate(const StreamSpec& spec);

// Text format: header line "n=<int> m=<int>", then one decimal item id per
// line. Round-trip identity holds for every generated stream.
void write_stream(const std::string& path, const Stream& s);
Stream read_stream(const std::string& path);

}  // namespace wesketch
