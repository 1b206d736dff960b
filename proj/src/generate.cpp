// Copyright 2026 The plconj Authors
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

#include "plconj/generate.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "plconj/error.hpp"

namespace plconj {

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // Values >= floor(2^64 / n) * n would wrap unevenly; reject them.
  const std::uint64_t threshold = -n % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

namespace {

void require_valid(const GenConfig& cfg) {
  if (cfg.denominator_bound < 2) {
    throw validation_error(errc::bad_config,
                           "denominator_bound must be at least 2");
  }
  if (cfg.max_nodes < 0) {
    throw validation_error(errc::bad_config, "max_nodes must be nonnegative");
  }
}

// k distinct grid indices from [lo, hi], ascending.
std::vector<std::uint64_t> distinct_sorted(SplitMix64& rng, std::uint64_t lo,
                                           std::uint64_t hi, std::uint64_t k) {
  std::set<std::uint64_t> chosen;
  while (chosen.size() < k) chosen.insert(lo + rng.below(hi - lo + 1));
  return {chosen.begin(), chosen.end()};
}

PLMap from_grid(const std::vector<std::uint64_t>& xs,
                const std::vector<std::uint64_t>& ys, std::uint64_t denom) {
  std::vector<PLMap::Point> pts;
  pts.reserve(xs.size() + 2);
  pts.push_back({Rational(0), Rational(0)});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pts.push_back({Rational(xs[i], denom), Rational(ys[i], denom)});
  }
  pts.push_back({Rational(1), Rational(1)});
  return PLMap::normalize(std::move(pts));
}

}  // namespace

PLMap random_homeomorphism(const GenConfig& cfg) {
  require_valid(cfg);
  SplitMix64 rng(cfg.seed);
  const std::uint64_t denom = static_cast<std::uint64_t>(cfg.denominator_bound);
  const std::uint64_t cap =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.max_nodes),
                              denom - 1);
  const std::uint64_t count = rng.below(cap + 1);
  auto xs = distinct_sorted(rng, 1, denom - 1, count);
  auto ys = distinct_sorted(rng, 1, denom - 1, count);
  return from_grid(xs, ys, denom);
}

PLMap random_element_of_f(const GenConfig& cfg) {
  require_valid(cfg);
  if (cfg.max_nodes < 1) {
    throw validation_error(errc::bad_config,
                           "sampling from F needs max_nodes >= 1");
  }
  if (cfg.denominator_bound < 3) {
    throw validation_error(
        errc::bad_config,
        "sampling from F needs denominator_bound >= 3 for an interior "
        "grid point above the diagonal");
  }
  SplitMix64 rng(cfg.seed);
  const std::uint64_t denom = static_cast<std::uint64_t>(cfg.denominator_bound);
  const std::uint64_t cap =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.max_nodes),
                              denom - 2);
  const std::uint64_t count = 1 + rng.below(cap);

  // x indices leave room for y > x on the same grid.
  auto xs = distinct_sorted(rng, 1, denom - 2, count);
  // y indices drawn back to front: each is above its x and below its
  // successor, which keeps the list strictly increasing and the whole
  // map strictly above the diagonal.
  std::vector<std::uint64_t> ys(count);
  std::uint64_t upper = denom;  // exclusive
  for (std::size_t i = count; i-- > 0;) {
    const std::uint64_t lo = xs[i] + 1;
    ys[i] = lo + rng.below(upper - lo);
    upper = ys[i];
  }
  return from_grid(xs, ys, denom);
}

}  // namespace plconj
