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

#include "plconj/plmap.hpp"

#include <algorithm>
#include <cstdlib>

#include "plconj/error.hpp"

namespace plconj {

namespace {

// (b - a) x (c - a) == 0, i.e. b lies on the segment through a and c.
bool collinear(const PLMap::Point& a, const PLMap::Point& b,
               const PLMap::Point& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

}  // namespace

PLMap PLMap::normalize(std::vector<Point> points) {
  std::sort(points.begin(), points.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].x == points[i - 1].x) {
      throw validation_error(errc::duplicate_x,
                             "duplicate x-coordinate " +
                                 to_string(points[i].x) +
                                 " in breakpoint list");
    }
  }
  if (points.size() < 2 || points.front().x != 0 || points.front().y != 0 ||
      points.back().x != 1 || points.back().y != 1) {
    throw validation_error(
        errc::bad_endpoints,
        "breakpoint list must start at (0,0) and end at (1,1)");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].y <= points[i - 1].y) {
      throw validation_error(errc::non_monotone_y,
                             "y-coordinates not strictly increasing at x = " +
                                 to_string(points[i].x));
    }
  }

  std::vector<Point> canon;
  canon.reserve(points.size());
  for (auto& p : points) {
    while (canon.size() >= 2 &&
           collinear(canon[canon.size() - 2], canon.back(), p)) {
      canon.pop_back();
    }
    canon.push_back(std::move(p));
  }
  return PLMap(std::move(canon));
}

const PLMap& PLMap::identity() {
  static const PLMap id{{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}};
  return id;
}

Rational PLMap::operator()(const Rational& x) const {
  if (x < 0 || x > 1) {
    throw validation_error(errc::out_of_domain,
                           "evaluation point " + to_string(x) +
                               " outside [0,1]");
  }
  // Index of the segment [x_i, x_{i+1}] containing x.
  auto it = std::upper_bound(
      pts_.begin(), pts_.end(), x,
      [](const Rational& v, const Point& p) { return v < p.x; });
  std::size_t i = static_cast<std::size_t>(it - pts_.begin());
  if (i == pts_.size()) return pts_.back().y;  // x == 1
  const Point& lo = pts_[i - 1];
  const Point& hi = pts_[i];
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

Rational PLMap::segment_slope(std::size_t i) const {
  const Point& lo = pts_[i];
  const Point& hi = pts_[i + 1];
  return (hi.y - lo.y) / (hi.x - lo.x);
}

PLMap compose(const PLMap& f, const PLMap& g) {
  const PLMap g_inv = inverse(g);
  std::vector<Rational> xs;
  xs.reserve(g.breakpoints().size() + f.breakpoints().size());
  for (const auto& p : g.breakpoints()) xs.push_back(p.x);
  for (const auto& p : f.breakpoints()) xs.push_back(g_inv(p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<PLMap::Point> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Rational y = f(g(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  return PLMap::normalize(std::move(pts));
}

PLMap inverse(const PLMap& f) {
  std::vector<PLMap::Point> pts;
  pts.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) pts.push_back({p.y, p.x});
  // Swapping coordinates preserves canonical form, but normalize anyway
  // to keep the single-entry-point invariant.
  return PLMap::normalize(std::move(pts));
}

PLMap power(const PLMap& f, std::int64_t n) {
  if (n < 0) return power(inverse(f), -n);
  PLMap result = PLMap::identity();
  PLMap base = f;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

SlopePair slopes_at(const PLMap& f, const Rational& x) {
  if (x <= 0 || x >= 1) {
    throw validation_error(errc::out_of_domain,
                           "one-sided slopes are defined on (0,1); got " +
                               to_string(x));
  }
  const auto& pts = f.breakpoints();
  auto it = std::lower_bound(
      pts.begin(), pts.end(), x,
      [](const PLMap::Point& p, const Rational& v) { return p.x < v; });
  std::size_t i = static_cast<std::size_t>(it - pts.begin());
  if (it != pts.end() && it->x == x) {
    // Interior breakpoint: slopes of the adjacent segments.
    return {f.segment_slope(i - 1), f.segment_slope(i)};
  }
  Rational s = f.segment_slope(i - 1);
  return {s, s};
}

bool is_in_f(const PLMap& f) {
  const auto& pts = f.breakpoints();
  if (pts.size() < 3) return false;  // identity
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (pts[i].y <= pts[i].x) return false;
  }
  return true;
}

}  // namespace plconj
