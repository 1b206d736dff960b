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

#ifndef PLCONJ_PLMAP_HPP_
#define PLCONJ_PLMAP_HPP_

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "plconj/rational.hpp"

namespace plconj {

// An orientation-preserving piecewise linear homeomorphism of [0,1],
// stored as its breakpoint list in canonical form:
//
//   * first breakpoint (0,0), last breakpoint (1,1), length >= 2;
//   * x- and y-coordinates strictly increasing;
//   * no interior breakpoint collinear with its neighbours, so every
//     interior breakpoint is a genuine slope change.
//
// Canonical form makes structural equality of breakpoint lists coincide
// with pointwise equality of the functions, which is what every exact
// decision in this library leans on. PLMap values are immutable; all
// operations are pure and return fresh values.
class PLMap {
 public:
  struct Point {
    Rational x;
    Rational y;
    bool operator==(const Point&) const = default;
  };

  // The single entry point establishing the canonical-form invariant.
  // Accepts breakpoints in any x-order, removes collinear interior
  // points, and validates endpoints and strict monotonicity. Throws
  // validation_error with code duplicate_x, non_monotone_y, or
  // bad_endpoints.
  static PLMap normalize(std::vector<Point> points);

  static const PLMap& identity();

  const std::vector<Point>& breakpoints() const { return pts_; }
  std::size_t segment_count() const { return pts_.size() - 1; }

  // Exact value at x by linear interpolation; x must lie in [0,1].
  Rational operator()(const Rational& x) const;

  // Slope of the i-th segment, 0 <= i < segment_count().
  Rational segment_slope(std::size_t i) const;
  Rational first_slope() const { return segment_slope(0); }
  Rational last_slope() const { return segment_slope(pts_.size() - 2); }

  bool operator==(const PLMap&) const = default;

 private:
  explicit PLMap(std::vector<Point> pts) : pts_(std::move(pts)) {}

  std::vector<Point> pts_;
};

struct SlopePair {
  Rational left;
  Rational right;
  bool operator==(const SlopePair&) const = default;
};

// Exact value of f at x; alias for f(x) matching the operation names
// used throughout the tests.
inline Rational evaluate(const PLMap& f, const Rational& x) { return f(x); }

// x |-> f(g(x)). Breakpoints are the union of g's breakpoint
// x-coordinates with the g-preimages of f's, then normalized.
PLMap compose(const PLMap& f, const PLMap& g);

// The inverse homeomorphism: breakpoint list with coordinates swapped.
PLMap inverse(const PLMap& f);

// n-fold composition; power(f, 0) is the identity and negative n
// iterates the inverse.
PLMap power(const PLMap& f, std::int64_t n);

// One-sided derivatives (f'_-(x), f'_+(x)) for x in the open interval
// (0,1); they differ exactly at breakpoints.
SlopePair slopes_at(const PLMap& f, const Rational& x);

// Membership in the class F: f(x) > x for all x in (0,1). Piecewise
// linearity reduces this to y > x at every interior breakpoint, so the
// identity is excluded.
bool is_in_f(const PLMap& f);

// Exact functional equality (structural equality of canonical forms).
inline bool equal(const PLMap& f, const PLMap& g) { return f == g; }

}  // namespace plconj

#endif  // PLCONJ_PLMAP_HPP_
