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

#include "plconj/conjugacy.hpp"

#include <cstddef>
#include <vector>

#include "plconj/error.hpp"

namespace plconj {

namespace {

constexpr std::size_t kReductionCap = 1'000'000;

void require_in_f(const PLMap& f, const char* op) {
  if (!is_in_f(f)) {
    throw validation_error(errc::not_in_f,
                           std::string(op) +
                               " requires a map strictly above the diagonal");
  }
}

// The (value, gap) word of a corner function read in node order. Each
// node is its own fundamental-domain representative and its forward
// orbit leaves the domain immediately, so the marked value at a node is
// exactly its star.
std::vector<MarkedPoint> position_word(const PLMap& corner) {
  const NodeProfile nodes = node_profile(corner);
  const Rational a = corner.first_slope();
  std::vector<MarkedPoint> word;
  word.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Rational gap = (i + 1 < nodes.size())
                       ? Rational(nodes[i + 1].z / nodes[i].z)
                       : Rational(a * nodes.front().z / nodes.back().z);
    word.push_back({nodes[i].star, std::move(gap)});
  }
  return word;
}

// Whether rotating w right by k (last k entries moved to the front)
// yields target.
bool rotation_matches(const std::vector<MarkedPoint>& w,
                      const std::vector<MarkedPoint>& target, std::size_t k) {
  const std::size_t m = w.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (w[(i + m - k) % m] != target[i]) return false;
  }
  return true;
}

}  // namespace

PLMap single_node_map(const Rational& p, const Rational& lambda) {
  if (p <= 0 || p >= 1) {
    throw validation_error(errc::out_of_domain,
                           "pivot must lie in (0,1); got " + to_string(p));
  }
  if (lambda <= 0 || lambda == 1) {
    throw validation_error(errc::out_of_domain,
                           "lambda must be positive and != 1; got " +
                               to_string(lambda));
  }
  Rational a = 1 / (p + lambda * (1 - p));
  return PLMap::normalize(
      {{Rational(0), Rational(0)}, {p, a * p}, {Rational(1), Rational(1)}});
}

std::pair<PLMap, ElementaryStep> elementary_conjugation(const PLMap& f) {
  require_in_f(f, "elementary_conjugation");
  const NodeProfile nodes = node_profile(f);
  const Rational& pivot = nodes.back().z;
  const Rational& lambda = nodes.back().star;
  PLMap h = single_node_map(pivot, lambda);
  PLMap g = compose(compose(h, f), inverse(h));
  return {std::move(g), ElementaryStep{pivot, lambda, std::move(h)}};
}

bool is_corner(const PLMap& f) {
  require_in_f(f, "is_corner");
  const auto& pts = f.breakpoints();
  const Rational& smallest = pts[1].x;
  const Rational& largest = pts[pts.size() - 2].x;
  return largest < f.first_slope() * smallest;
}

CornerReduction corner_reduce(const PLMap& f) {
  require_in_f(f, "corner_reduce");
  CornerReduction r{f, PLMap::identity()};
  std::size_t steps = 0;
  while (!is_corner(r.corner)) {
    if (++steps > kReductionCap) {
      throw internal_error(
          "corner reduction exceeded the iteration safety cap");
    }
    auto [next, step] = elementary_conjugation(r.corner);
    r.corner = std::move(next);
    r.witness = compose(step.conjugator, r.witness);
  }
  return r;
}

PLMap corner_from_profile(const BetaProfile& profile) {
  const auto& marked = profile.marked();
  const Rational& a = profile.alpha();
  const std::size_t m = marked.size();

  // Node positions relative to x_f (partial gap products) and the
  // breakpoint y-coordinates relative to x_f (slope recursion).
  std::vector<Rational> rel_pos(m), rel_val(m);
  Rational slope = a;
  rel_pos[0] = 1;
  rel_val[0] = a;
  for (std::size_t i = 1; i < m; ++i) {
    slope *= marked[i - 1].value;
    rel_pos[i] = rel_pos[i - 1] * marked[i - 1].gap;
    rel_val[i] = rel_val[i - 1] + slope * (rel_pos[i] - rel_pos[i - 1]);
  }
  slope *= marked.back().value;  // slope of the final segment

  // Scale pinned by f(1) = 1.
  Rational den = rel_val.back() - slope * rel_pos.back();
  if (den == 0) {
    throw validation_error(errc::invalid_profile,
                           "profile does not pin a corner function");
  }
  Rational x = (1 - slope) / den;
  if (x <= 0 || rel_pos.back() * x >= 1 || rel_val.back() * x >= 1) {
    throw validation_error(errc::invalid_profile,
                           "profile has no realization fixing [0,1]");
  }

  std::vector<PLMap::Point> pts;
  pts.reserve(m + 2);
  pts.push_back({Rational(0), Rational(0)});
  for (std::size_t i = 0; i < m; ++i) {
    pts.push_back({rel_pos[i] * x, rel_val[i] * x});
  }
  pts.push_back({Rational(1), Rational(1)});
  PLMap corner = PLMap::normalize(std::move(pts));
  if (!is_in_f(corner)) {
    throw validation_error(errc::invalid_profile,
                           "profile reconstructs a map outside F");
  }
  return corner;
}

ConjugacyOutcome decide_conjugacy(const PLMap& f, const PLMap& g) {
  require_in_f(f, "decide_conjugacy");
  require_in_f(g, "decide_conjugacy");
  Rational alpha_f = alpha(f);
  Rational alpha_g = alpha(g);
  if (alpha_f != alpha_g) {
    return ConjugacyOutcome::alpha_mismatch(std::move(alpha_f),
                                            std::move(alpha_g));
  }

  CornerReduction rf = corner_reduce(f);
  CornerReduction rg = corner_reduce(g);
  BetaProfile pf = beta_profile(rf.corner);
  BetaProfile pg = beta_profile(rg.corner);
  if (!beta_equal(pf, pg)) {
    return ConjugacyOutcome::beta_mismatch(std::move(pf), std::move(pg));
  }

  // Equal profiles mean the position words are rotations of one
  // another. Cycle rf.corner one elementary conjugation at a time; at
  // every offset whose rotated word matches, the corner functions must
  // already coincide (they share alpha and the full marked word pinned
  // at position zero), so the first exact match yields the witness.
  const std::vector<MarkedPoint> word_f = position_word(rf.corner);
  const std::vector<MarkedPoint> word_g = position_word(rg.corner);
  if (word_f.size() != word_g.size()) {
    throw internal_error("equal profiles with different word lengths");
  }
  PLMap cycled = rf.corner;
  PLMap accumulated = PLMap::identity();
  const PLMap hg_inv = inverse(rg.witness);
  for (std::size_t k = 0; k < word_f.size(); ++k) {
    if (rotation_matches(word_f, word_g, k) && cycled == rg.corner) {
      return ConjugacyOutcome::conjugate(
          compose(compose(hg_inv, accumulated), rf.witness));
    }
    auto [next, step] = elementary_conjugation(cycled);
    cycled = std::move(next);
    accumulated = compose(step.conjugator, accumulated);
  }
  throw internal_error(
      "matching beta profiles but no node cycling aligned the corner "
      "functions");
}

bool verify_conjugacy(const PLMap& f, const PLMap& g, const PLMap& w) {
  return compose(compose(w, f), inverse(w)) == g;
}

}  // namespace plconj
