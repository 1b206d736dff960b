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

#include "plconj/invariants.hpp"

#include <algorithm>
#include <utility>

#include "plconj/error.hpp"

namespace plconj {

namespace {

// Strict (value, gap) ordering used for the canonical rotation.
bool marked_less(const MarkedPoint& a, const MarkedPoint& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.gap < b.gap;
}

// Index of the lexicographically least rotation; the O(m^2) scan is
// fine at the profile sizes that occur here.
std::size_t least_rotation(const std::vector<MarkedPoint>& w) {
  const std::size_t m = w.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < m; ++cand) {
    for (std::size_t j = 0; j < m; ++j) {
      const MarkedPoint& a = w[(cand + j) % m];
      const MarkedPoint& b = w[(best + j) % m];
      if (a == b) continue;
      if (marked_less(a, b)) best = cand;
      break;
    }
  }
  return best;
}

void require_in_f(const PLMap& f, const char* op) {
  if (!is_in_f(f)) {
    throw validation_error(errc::not_in_f,
                           std::string(op) +
                               " requires a map strictly above the diagonal");
  }
}

// prod_{n>=0} f*(f^n(x)): multiply stars along the forward orbit until
// an iterate passes the largest node, after which every factor is 1.
Rational orbit_product(const PLMap& f, Rational x, const Rational& largest_node) {
  Rational product(1);
  while (x <= largest_node) {
    product *= f_star(f, x);
    x = f(x);
  }
  return product;
}

// The unique backward iterate of z in [base, alpha*base), for
// base <= x_f <= z. Backward iterates below x_f contract exactly by
// alpha, so the loop terminates.
Rational pull_back(const PLMap& f_inv, Rational z, const Rational& upper) {
  while (z >= upper) z = f_inv(z);
  return z;
}

BetaProfile profile_over_domain(const PLMap& f, const Rational& base) {
  const NodeProfile nodes = node_profile(f);
  Rational a = f.first_slope();
  const Rational upper = a * base;
  const Rational largest = nodes.back().z;
  const PLMap f_inv = inverse(f);

  std::vector<Rational> reps;
  reps.reserve(nodes.size());
  for (const Node& n : nodes) reps.push_back(pull_back(f_inv, n.z, upper));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  std::vector<Rational> values;
  std::vector<Rational> positions;
  for (Rational& u : reps) {
    Rational v = orbit_product(f, u, largest);
    if (v == 1) continue;  // stars cancelled along this orbit
    values.push_back(std::move(v));
    positions.push_back(std::move(u));
  }
  if (positions.empty()) {
    throw internal_error("orbit products all cancelled for a map in F");
  }

  std::vector<MarkedPoint> marked;
  marked.reserve(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    Rational gap = (i + 1 < positions.size())
                       ? Rational(positions[i + 1] / positions[i])
                       : Rational(a * positions.front() / positions.back());
    marked.push_back({std::move(values[i]), std::move(gap)});
  }
  return BetaProfile(std::move(a), std::move(marked));
}

}  // namespace

BetaProfile::BetaProfile(Rational alpha, std::vector<MarkedPoint> marked)
    : alpha_(std::move(alpha)), marked_(std::move(marked)) {
  if (alpha_ <= 1) {
    throw validation_error(errc::invalid_profile, "alpha must exceed 1");
  }
  if (marked_.empty()) {
    throw validation_error(errc::invalid_profile,
                           "profile needs at least one marked point");
  }
  Rational gap_product(1);
  Rational value_product(1);
  for (const MarkedPoint& p : marked_) {
    if (p.value <= 0 || p.value == 1) {
      throw validation_error(errc::invalid_profile,
                             "marked values must be positive and != 1");
    }
    if (p.gap <= 1) {
      throw validation_error(errc::invalid_profile, "gaps must exceed 1");
    }
    gap_product *= p.gap;
    value_product *= p.value;
  }
  if (gap_product != alpha_) {
    throw validation_error(errc::invalid_profile,
                           "gaps must multiply to alpha");
  }
  if (value_product >= 1) {
    throw validation_error(errc::invalid_profile,
                           "marked values must multiply to less than 1");
  }
  std::rotate(marked_.begin(), marked_.begin() + least_rotation(marked_),
              marked_.end());
}

Rational f_star(const PLMap& f, const Rational& x) {
  SlopePair s = slopes_at(f, x);
  return s.right / s.left;
}

NodeProfile node_profile(const PLMap& f) {
  const auto& pts = f.breakpoints();
  NodeProfile nodes;
  nodes.reserve(pts.size() - 2);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    nodes.push_back({pts[i].x, f.segment_slope(i) / f.segment_slope(i - 1)});
  }
  return nodes;
}

Rational alpha(const PLMap& f) {
  require_in_f(f, "alpha");
  return f.first_slope();
}

Rational phi_value(const PLMap& f, const Rational& x) {
  require_in_f(f, "phi_value");
  const auto& pts = f.breakpoints();
  const Rational& x_f = pts[1].x;
  const Rational upper = f.first_slope() * x_f;
  if (x < x_f || x >= upper) {
    throw validation_error(errc::out_of_domain,
                           to_string(x) + " outside the fundamental domain [" +
                               to_string(x_f) + ", " + to_string(upper) + ")");
  }
  return orbit_product(f, x, pts[pts.size() - 2].x);
}

BetaProfile beta_profile(const PLMap& f) {
  require_in_f(f, "beta_profile");
  return profile_over_domain(f, f.breakpoints()[1].x);
}

BetaProfile profile_from_base(const PLMap& f, const Rational& a) {
  require_in_f(f, "profile_from_base");
  if (a <= 0 || a > f.breakpoints()[1].x) {
    throw validation_error(errc::out_of_domain,
                           "base point must lie in (0, x_f]; got " +
                               to_string(a));
  }
  return profile_over_domain(f, a);
}

}  // namespace plconj
