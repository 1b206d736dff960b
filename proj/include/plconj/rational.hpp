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

#ifndef PLCONJ_RATIONAL_HPP_
#define PLCONJ_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace plconj {

// Every scalar in the library is an exact arbitrary-precision rational,
// kept in lowest terms with a positive denominator by the GMP backend.
// There is no floating point anywhere; equality and ordering are exact.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Renders q in lowest terms as "p/q", or as a bare integer when the
// denominator is 1 ("0", "1", "-3", "1/4").
std::string to_string(const Rational& q);

// Parses "p", "-p", or "p/q" with q > 0. Input need not be in lowest
// terms; the result always is. Throws validation_error(errc::parse_error)
// on anything else (including empty text, signs on the denominator, and
// q = 0).
Rational parse_rational(std::string_view text);

}  // namespace plconj

#endif  // PLCONJ_RATIONAL_HPP_
