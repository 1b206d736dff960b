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

#ifndef PLCONJ_CONJUGACY_HPP_
#define PLCONJ_CONJUGACY_HPP_

#include <optional>
#include <utility>
#include <variant>

#include "plconj/invariants.hpp"
#include "plconj/plmap.hpp"
#include "plconj/rational.hpp"

namespace plconj {

// One elementary conjugation: conjugation by the unique two-segment map
// with node `pivot` and slope ratio `lambda` there. Cancels the node at
// the pivot and reintroduces it one fundamental-domain level down.
struct ElementaryStep {
  Rational pivot;
  Rational lambda;
  PLMap conjugator;
};

struct AlphaMismatch {
  Rational alpha_f;
  Rational alpha_g;
};

struct BetaMismatch {
  BetaProfile profile_f;
  BetaProfile profile_g;
};

// Result of a conjugacy decision: either an explicit witness w with
// g = w o f o w^{-1} (always exactly verifiable), or the invariant that
// separates the two maps.
class ConjugacyOutcome {
 public:
  static ConjugacyOutcome conjugate(PLMap witness) {
    return ConjugacyOutcome(std::move(witness));
  }
  static ConjugacyOutcome alpha_mismatch(Rational alpha_f, Rational alpha_g) {
    return ConjugacyOutcome(
        AlphaMismatch{std::move(alpha_f), std::move(alpha_g)});
  }
  static ConjugacyOutcome beta_mismatch(BetaProfile pf, BetaProfile pg) {
    return ConjugacyOutcome(BetaMismatch{std::move(pf), std::move(pg)});
  }

  bool is_conjugate() const { return std::holds_alternative<PLMap>(result_); }
  const PLMap& witness() const { return std::get<PLMap>(result_); }
  const AlphaMismatch* alpha_mismatch() const {
    return std::get_if<AlphaMismatch>(&result_);
  }
  const BetaMismatch* beta_mismatch() const {
    return std::get_if<BetaMismatch>(&result_);
  }

 private:
  using Result = std::variant<PLMap, AlphaMismatch, BetaMismatch>;
  explicit ConjugacyOutcome(Result r) : result_(std::move(r)) {}
  Result result_;
};

struct CornerReduction {
  PLMap corner;
  PLMap witness;  // corner == witness o f o witness^{-1}
};

// The unique element of PLF^+([0,1]) with the single node p and slope
// ratio lambda there: breakpoints (0,0), (p, a*p), (1,1) with
// a = 1/(p + lambda*(1-p)). Requires 0 < p < 1 and lambda positive,
// != 1.
PLMap single_node_map(const Rational& p, const Rational& lambda);

// Conjugates f by the single-node map pinned at f's largest node z_m
// with lambda = f*(z_m). The pivot node cancels and reappears at
// h(f^{-1}(z_m)); coincidences with existing nodes merge under
// normalization. On a corner function this cycles the node values, last
// to first.
std::pair<PLMap, ElementaryStep> elementary_conjugation(const PLMap& f);

// Whether all nodes of f lie in the fundamental domain
// [x_f, alpha*x_f), i.e. the largest node satisfies y_f < alpha*x_f.
bool is_corner(const PLMap& f);

// Repeated elementary conjugation until the map is a corner function.
// The returned witness is the composition of the conjugators applied
// (identity when f is already corner). Each step moves the top node one
// level down, so the loop terminates; a safety cap guards against bugs
// with an internal_error.
CornerReduction corner_reduce(const PLMap& f);

// The unique corner function with the profile's invariants, consuming
// the marked sequence in stored order with the first entry placed at
// x_f. Node positions are alpha-partial-products of the gaps scaled so
// that the map fixes 1; node stars are the marked values. Throws
// validation_error(errc::invalid_profile) if no corner function in F
// realizes the data.
PLMap corner_from_profile(const BetaProfile& profile);

// Decides conjugacy of f, g in F per Brin-Squier: compare alpha,
// corner-reduce both, compare beta profiles, then cycle the first
// corner function's nodes until the corner functions coincide. Returns
// either a verified witness or the mismatched invariant.
ConjugacyOutcome decide_conjugacy(const PLMap& f, const PLMap& g);

// Exact check that g == w o f o w^{-1}.
bool verify_conjugacy(const PLMap& f, const PLMap& g, const PLMap& w);

}  // namespace plconj

#endif  // PLCONJ_CONJUGACY_HPP_
