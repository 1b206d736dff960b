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

#include "plconj/interface.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

#include "plconj/error.hpp"

namespace plconj {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational coordinate(const ordered_json& v, std::size_t entry, const char* axis) {
  if (!v.is_string()) {
    throw validation_error(errc::parse_error,
                           "breakpoints[" + std::to_string(entry) + "]: " +
                               axis + " must be a rational string");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const validation_error& e) {
    throw validation_error(errc::parse_error,
                           "breakpoints[" + std::to_string(entry) + "]: " +
                               e.what());
  }
}

}  // namespace

PLMap parse_map(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error(errc::parse_error, e.what());  // carries byte offset
  }
  if (!doc.is_object() || !doc.contains("breakpoints") ||
      !doc["breakpoints"].is_array()) {
    throw validation_error(errc::parse_error,
                           "document must be {\"breakpoints\": [[x,y],...]}");
  }
  std::vector<PLMap::Point> pts;
  const auto& arr = doc["breakpoints"];
  pts.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2) {
      throw validation_error(errc::parse_error,
                             "breakpoints[" + std::to_string(i) +
                                 "]: expected a [x, y] pair");
    }
    pts.push_back({coordinate(pair[0], i, "x"), coordinate(pair[1], i, "y")});
  }
  return PLMap::normalize(std::move(pts));
}

std::string serialize_map(const PLMap& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : f.breakpoints()) {
    arr.push_back({to_string(p.x), to_string(p.y)});
  }
  ordered_json doc;
  doc["breakpoints"] = std::move(arr);
  return doc.dump();
}

std::string render_invariants(const BetaProfile& profile) {
  ordered_json marked = ordered_json::array();
  for (const auto& m : profile.marked()) {
    ordered_json entry;
    entry["value"] = to_string(m.value);
    entry["gap"] = to_string(m.gap);
    marked.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["alpha"] = to_string(profile.alpha());
  doc["beta"] = ordered_json{{"marked", std::move(marked)}};
  return doc.dump();
}

CanonicalKey canonical_key(const PLMap& f) {
  return CanonicalKey{render_invariants(beta_profile(f))};
}

std::vector<PLMap::Point> plot_samples(const PLMap& f, int n) {
  if (n < 1) {
    throw validation_error(errc::out_of_domain,
                           "sample count must be positive");
  }
  std::vector<PLMap::Point> pts = f.breakpoints();
  for (int i = 0; i <= n; ++i) {
    Rational x(i, n);
    pts.push_back({x, f(x)});
  }
  std::sort(pts.begin(), pts.end(),
            [](const PLMap::Point& a, const PLMap::Point& b) {
              return a.x < b.x;
            });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const PLMap::Point& a, const PLMap::Point& b) {
                          return a.x == b.x;
                        }),
            pts.end());
  return pts;
}

std::string plot_csv(const PLMap& f, int n) {
  std::string out = "x,y\n";
  for (const auto& p : plot_samples(f, n)) {
    out += to_string(p.x);
    out += ',';
    out += to_string(p.y);
    out += '\n';
  }
  return out;
}

}  // namespace plconj
