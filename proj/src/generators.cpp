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

#include "wesketch/generators.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

namespace wesketch {

namespace {

void shuffle_ids(std::vector<std::uint64_t>& ids, Rng& rng) {
  for (std::size_t i = ids.size(); i > 1; --i)
    std::swap(ids[i - 1], ids[rng.next_below(i)]);
}

std::vector<std::uint64_t> shuffled_universe(std::uint64_t n, Rng& rng) {
  std::vector<std::uint64_t> ids(n);
  std::iota(ids.begin(), ids.end(), 1);
  shuffle_ids(ids, rng);
  return ids;
}

// Block of `block_len` copies of one random item at a uniform position;
// all other positions hold distinct singletons different from it.
Stream planted_block_stream(std::uint64_t n, std::uint64_t block_len,
                            Rng& rng) {
  std::vector<std::uint64_t> ids = shuffled_universe(n, rng);
  const std::uint64_t heavy = ids[0];
  const std::uint64_t start = rng.next_below(n - block_len + 1);

  Stream s;
  s.n = n;
  s.items.reserve(n);
  std::size_t next_single = 1;
  for (std::uint64_t pos = 0; pos < n; ++pos) {
    if (pos >= start && pos < start + block_len)
      s.items.push_back(heavy);
    else
      s.items.push_back(ids[next_single++]);
  }
  return s;
}

}  // namespace

std::uint64_t rounded_root(std::uint64_t n, double p) {
  return static_cast<std::uint64_t>(
      std::llround(std::pow(static_cast<double>(n), 1.0 / p)));
}

Stream gen_permutation(std::uint64_t n, std::uint64_t seed) {
  Rng rng(SeededPrf(seed, "permutation").key());
  Stream s;
  s.n = n;
  s.items = shuffled_universe(n, rng);
  return s;
}

std::pair<Stream, Stream> gen_lowerbound_pair(std::uint64_t n, double p,
                                              std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("gen_lowerbound_pair: n must be >= 4");
  const std::uint64_t b = rounded_root(n, p);
  if (b < 2 || b > n)
    throw std::invalid_argument("gen_lowerbound_pair: block length out of range");

  Rng rng1(SeededPrf(seed, "lowerbound-s1").key());
  Stream s1 = planted_block_stream(n, b, rng1);

  Rng rng2(SeededPrf(seed, "lowerbound-s2").key());
  Stream s2;
  s2.n = n;
  s2.items = shuffled_universe(n, rng2);
  return {std::move(s1), std::move(s2)};
}

Stream gen_planted_hh(std::uint64_t n, double p, double eps,
                      std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("gen_planted_hh: n must be >= 4");
  if (!(eps > 0.0 && eps <= 1.0))
    throw std::invalid_argument("gen_planted_hh: eps must be in (0,1]");
  const std::uint64_t block_len = static_cast<std::uint64_t>(
      std::ceil(eps * std::pow(static_cast<double>(n), 1.0 / p)));
  if (block_len < 1 || block_len > n)
    throw std::invalid_argument("gen_planted_hh: block length out of range");
  Rng rng(SeededPrf(seed, "planted-hh").key());
  return planted_block_stream(n, block_len, rng);
}

Stream gen_pseudoheavy(std::uint64_t n, std::uint64_t seed) {
  const std::uint64_t w = static_cast<std::uint64_t>(
      std::llround(std::pow(static_cast<double>(n), 1.0 / 8.0)));
  if (w < 2 || w * w * w * w * w * w * w * w != n)
    throw std::invalid_argument("gen_pseudoheavy: n must be a perfect 8th power");
  const std::uint64_t q8 = w;            // n^(1/8)
  const std::uint64_t q4 = w * w;        // n^(1/4)
  const std::uint64_t q2 = q4 * q4;      // sqrt(n)
  const std::uint64_t heavy_spacing = q2 / q8;

  Stream s;
  s.n = n;
  s.items.reserve(n);

  // Canonical ids first: 1 = heavy, [2, q2+1] = pseudo-heavy pool, fresh
  // singletons afterwards; a seeded relabeling is applied at the end.
  const std::uint64_t heavy = 1;
  std::uint64_t next_fresh = q2 + 2;
  std::uint64_t next_pseudo = 2;

  const std::uint64_t group_span = 1 + q8;   // special block + its trailer
  const std::uint64_t grouped_blocks = q4 * group_span;
  for (std::uint64_t block = 0; block < q2; ++block) {
    const bool in_groups = block < grouped_blocks;
    if (in_groups && block % group_span == 0) {
      // Special block: q4 distinct pseudo-heavy items, q4 copies each.
      for (std::uint64_t j = 0; j < q4; ++j) {
        for (std::uint64_t c = 0; c < q4; ++c) s.items.push_back(next_pseudo);
        ++next_pseudo;
      }
    } else if (in_groups) {
      // Trailer block: q8 heavy instances spread evenly, rest fresh.
      for (std::uint64_t pos = 0; pos < q2; ++pos) {
        if (pos % heavy_spacing == 0)
          s.items.push_back(heavy);
        else
          s.items.push_back(next_fresh++);
      }
    } else {
      for (std::uint64_t pos = 0; pos < q2; ++pos)
        s.items.push_back(next_fresh++);
    }
  }

  // Seeded relabeling keeps frequencies intact while randomizing ids.
  Rng rng(SeededPrf(seed, "pseudoheavy").key());
  std::vector<std::uint64_t> relabel = shuffled_universe(n, rng);
  for (std::uint64_t& item : s.items) item = relabel[item - 1];
  return s;
}

Stream gen_zipf(std::uint64_t n, std::uint64_t m, double s_exp,
                std::uint64_t seed) {
  if (s_exp < 0.0) throw std::invalid_argument("gen_zipf: s must be >= 0");
  std::vector<long double> cdf(n);
  long double total = 0.0L;
  for (std::uint64_t i = 0; i < n; ++i) {
    total += powl(static_cast<long double>(i + 1),
                  -static_cast<long double>(s_exp));
    cdf[i] = total;
  }

  Rng rng(SeededPrf(seed, "zipf").key());
  Stream s;
  s.n = n;
  s.items.reserve(m);
  for (std::uint64_t t = 0; t < m; ++t) {
    const long double u = static_cast<long double>(rng.next_double()) * total;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const std::uint64_t rank =
        it == cdf.end() ? n - 1
                        : static_cast<std::uint64_t>(it - cdf.begin());
    s.items.push_back(rank + 1);
  }
  return s;
}

Stream generate(const StreamSpec& spec) {
  switch (spec.kind) {
    case StreamKind::kPermutation:
      return gen_permutation(spec.n, spec.seed);
    case StreamKind::kZipf:
      return gen_zipf(spec.n, spec.m, spec.zipf_s, spec.seed);
    case StreamKind::kPlantedHh:
      return gen_planted_hh(spec.n, spec.p, spec.eps, spec.seed);
    case StreamKind::kLowerboundS1:
      return gen_lowerbound_pair(spec.n, spec.p, spec.seed).first;
    case StreamKind::kLowerboundS2:
      return gen_lowerbound_pair(spec.n, spec.p, spec.seed).second;
    case StreamKind::kPseudoheavy:
      return gen_pseudoheavy(spec.n, spec.seed);
  }
  throw std::invalid_argument("generate: unknown stream kind");
}

void write_stream(const std::string& path, const Stream& s) {
  std::ofstream out(path);
  if (!out)
    throw StreamIoError(StreamIoError::Kind::kTruncated,
                        "write_stream: cannot open " + path);
  out << "n=" << s.n << " m=" << s.m() << "\n";
  for (std::uint64_t item : s.items) out << item << "\n";
  if (!out)
    throw StreamIoError(StreamIoError::Kind::kTruncated,
                        "write_stream: short write to " + path);
}

Stream read_stream(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw StreamIoError(StreamIoError::Kind::kTruncated,
                        "read_stream: cannot open " + path);
  std::string header;
  if (!std::getline(in, header))
    throw StreamIoError(StreamIoError::Kind::kMalformedHeader,
                        "read_stream: missing header");
  std::uint64_t n = 0, m = 0;
  {
    std::istringstream hs(header);
    std::string ntok, mtok;
    if (!(hs >> ntok >> mtok) || ntok.rfind("n=", 0) != 0 ||
        mtok.rfind("m=", 0) != 0)
      throw StreamIoError(StreamIoError::Kind::kMalformedHeader,
                          "read_stream: bad header '" + header + "'");
    try {
      n = std::stoull(ntok.substr(2));
      m = std::stoull(mtok.substr(2));
    } catch (const std::exception&) {
      throw StreamIoError(StreamIoError::Kind::kMalformedHeader,
                          "read_stream: bad header '" + header + "'");
    }
  }

  Stream s;
  s.n = n;
  s.items.reserve(m);
  std::string line;
  for (std::uint64_t t = 0; t < m; ++t) {
    if (!std::getline(in, line))
      throw StreamIoError(StreamIoError::Kind::kTruncated,
                          "read_stream: expected " + std::to_string(m) +
                              " items, got " + std::to_string(t));
    std::uint64_t item = 0;
    try {
      std::size_t used = 0;
      item = std::stoull(line, &used);
      while (used < line.size() &&
             (line[used] == ' ' || line[used] == '\r' || line[used] == '\t'))
        ++used;
      if (used != line.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw StreamIoError(StreamIoError::Kind::kMalformedItem,
                          "read_stream: bad item line '" + line + "'");
    }
    if (item < 1 || item > n)
      throw StreamIoError(StreamIoError::Kind::kItemOutOfRange,
                          "read_stream: item " + std::to_string(item) +
                              " outside [1," + std::to_string(n) + "]");
    s.items.push_back(item);
  }
  return s;
}

}  // namespace wesketch
