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

#ifndef PLCONJ_INVARIANTS_HPP_
#define PLCONJ_INVARIANTS_HPP_

#include <vector>

#include "plconj/plmap.hpp"
#include "plconj/rational.hpp"

namespace plconj {

// A node of a map: an interior point z where the map is not locally
// affine, together with the slope ratio star = f'_+(z)/f'_-(z) != 1.
struct Node {
  Rational z;
  Rational star;
  bool operator==(const Node&) const = default;
};

// All nodes in increasing order. Empty exactly for the identity; for
// maps in F it is always nonempty.
using NodeProfile = std::vector<Node>;

struct MarkedPoint {
  Rational value;  // product of star values along the point's orbit, != 1
  Rational gap;    // exact ratio to the next marked point on the circle, > 1
  bool operator==(const MarkedPoint&) const = default;
};

// The conjugacy invariant pair of a map f in F.
//
// alpha is the slope of f on [0, x_f]. The marked list encodes the
// circle function psi: each entry is a point of the fundamental domain
// [x_f, alpha*x_f) carrying a non-1 orbit product, with its
// multiplicative gap to the cyclically next marked point (the gaps
// multiply to alpha, closing the circle). Positions are never stored as
// logarithms; ratios keep everything rational and equality decidable.
//
// Translation equivalence on the circle becomes rotation of the list,
// so profiles are stored in canonical rotation: the lexicographically
// least rotation under exact (value, gap) ordering. Two maps in F are
// conjugate iff their BetaProfiles compare equal.
class BetaProfile {
 public:
  // Canonicalizes the rotation of `marked`. Validates the structural
  // invariants (alpha > 1, nonempty marked list, values positive and
  // != 1, gaps > 1, gaps multiplying to alpha, values multiplying to
  // less than 1) and throws validation_error(errc::invalid_profile) on
  // violation.
  BetaProfile(Rational alpha, std::vector<MarkedPoint> marked);

  const Rational& alpha() const { return alpha_; }
  const std::vector<MarkedPoint>& marked() const { return marked_; }

  bool operator==(const BetaProfile&) const = default;

 private:
  Rational alpha_;
  std::vector<MarkedPoint> marked_;
};

// f'_+(x)/f'_-(x) for x in (0,1); equals 1 iff x is not a node.
Rational f_star(const PLMap& f, const Rational& x);

// Every interior breakpoint with its star value (canonical form makes
// the two notions coincide).
NodeProfile node_profile(const PLMap& f);

// The slope of f on [0, x_f], f in F; always > 1. Throws
// validation_error(errc::not_in_f) otherwise.
Rational alpha(const PLMap& f);

// The finite orbit product  prod_{n>=0} f*(f^n(x))  for x in the
// fundamental domain [x_f, alpha*x_f). All but finitely many factors
// are 1: once an iterate passes the largest node the product is stable.
Rational phi_value(const PLMap& f, const Rational& x);

// The invariant pair (alpha, beta) of f in F. Nodes are pulled back to
// their unique representatives in the fundamental domain; each
// representative's orbit product becomes a marked value (products of
// exactly 1 are dropped), and consecutive representatives give the gaps.
BetaProfile beta_profile(const PLMap& f);

// Profiles are canonical, so equality is structural.
inline bool beta_equal(const BetaProfile& a, const BetaProfile& b) {
  return a == b;
}

// Same construction as beta_profile but over the fundamental domain
// [a, alpha*a) for a base point 0 < a <= x_f. By Brin-Squier's rebasing
// lemma the result equals beta_profile(f).
BetaProfile profile_from_base(const PLMap& f, const Rational& a);

}  // namespace plconj

#endif  // PLCONJ_INVARIANTS_HPP_
