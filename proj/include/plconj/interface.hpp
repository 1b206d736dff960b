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

#ifndef PLCONJ_INTERFACE_HPP_
#define PLCONJ_INTERFACE_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "plconj/invariants.hpp"
#include "plconj/plmap.hpp"

namespace plconj {

// The decidable conjugacy fingerprint of a map in F: a canonical text
// rendering of (alpha, canonical marked sequence). Two maps in F carry
// equal keys exactly when they are conjugate.
struct CanonicalKey {
  std::string text;
  auto operator<=>(const CanonicalKey&) const = default;
};

// Map file format: {"breakpoints":[["0","0"],["1/4","1/2"],["1","1"]]}
// with rationals as strings. Input tolerates non-lowest-terms fractions;
// output is always canonical. Parse failures throw
// validation_error(errc::parse_error) carrying position information;
// breakpoint-list violations carry the offending entry.
PLMap parse_map(std::string_view text);

// Canonical byte-stable rendering: lowest-terms rationals, fixed field
// order, no whitespace. parse_map(serialize_map(f)) == f, and equal maps
// serialize identically.
std::string serialize_map(const PLMap& f);

// The pinned invariant report, e.g.
// {"alpha":"2","beta":{"marked":[{"value":"1/3","gap":"2"}]}}
// in canonical rotation.
std::string render_invariants(const BetaProfile& profile);

CanonicalKey canonical_key(const PLMap& f);

// The n+1 uniform grid samples (i/n, f(i/n)) merged with every
// breakpoint, sorted by x, exact.
std::vector<PLMap::Point> plot_samples(const PLMap& f, int n);

// CSV rendering of plot_samples with header "x,y" and "p/q" fields.
std::string plot_csv(const PLMap& f, int n);

}  // namespace plconj

#endif  // PLCONJ_INTERFACE_HPP_
