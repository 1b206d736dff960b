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

#include "plconj/rational.hpp"

#include <algorithm>
#include <cctype>

#include "plconj/error.hpp"

namespace plconj {

std::string to_string(const Rational& q) { return q.str(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

// GMP's string constructor treats a leading 0 as an octal prefix, so
// digit runs are stripped to their canonical decimal form first.
Integer decimal(std::string_view digits) {
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  return Integer(std::string(digits.substr(i)));
}

[[noreturn]] void reject(std::string_view text) {
  throw validation_error(errc::parse_error,
                         "not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
    if (!all_digits(den)) reject(text);
  }
  if (!all_digits(num)) reject(text);

  Integer n = decimal(num);
  if (negative) n = -n;
  if (den.empty()) return Rational(n);
  Integer d = decimal(den);
  if (d == 0) reject(text);
  return Rational(n, d);
}

}  // namespace plconj
