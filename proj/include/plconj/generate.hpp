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

#ifndef PLCONJ_GENERATE_HPP_
#define PLCONJ_GENERATE_HPP_

#include <cstdint>

#include "plconj/plmap.hpp"

namespace plconj {

// SplitMix64 (Steele/Lea/Vigna). Chosen over <random> engines because
// its output is pinned by the algorithm itself, so seeded corpora
// reproduce bit-for-bit across standard libraries and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, n), n >= 1, with rejection of the biased
  // tail, so the distribution is exact and portable.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

// Deterministic generation recipe: identical configs yield identical
// maps. Breakpoints are sampled on the grid i/denominator_bound, so
// coordinate denominators are bounded at generation time (they grow
// freely under later composition, which is expected).
struct GenConfig {
  std::uint64_t seed = 0;
  int max_nodes = 4;
  int denominator_bound = 64;
};

// A random element of PLF^+([0,1]) with at most max_nodes nodes.
// max_nodes = 0 yields the identity. Throws
// validation_error(errc::bad_config) for denominator_bound < 2 or
// negative max_nodes.
PLMap random_homeomorphism(const GenConfig& cfg);

// A random element of F (strictly above the diagonal) with 1..max_nodes
// nodes. Requires max_nodes >= 1 and denominator_bound >= 3, the
// smallest grid admitting an interior point above the diagonal.
PLMap random_element_of_f(const GenConfig& cfg);

}  // namespace plconj

#endif  // PLCONJ_GENERATE_HPP_
