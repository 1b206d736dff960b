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

#ifndef PLCONJ_ERROR_HPP_
#define PLCONJ_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace plconj {

// Kind of input rejection reported by validation_error.
enum class errc {
  duplicate_x,     // two breakpoints share an x-coordinate
  non_monotone_y,  // y-coordinates fail to be strictly increasing
  bad_endpoints,   // first/last breakpoint is not (0,0)/(1,1)
  out_of_domain,   // argument outside the operation's domain
  not_in_f,        // map is not strictly above the diagonal on (0,1)
  invalid_profile, // beta profile violates its structural invariants
  parse_error,     // malformed text input
  bad_config,      // degenerate generator configuration
};

// Rejection of caller-supplied data. The CLI maps these to exit code 2.
class validation_error : public std::runtime_error {
 public:
  validation_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Violation of an invariant the library itself is responsible for.
// Reaching one of these is a bug, not bad input; CLI exit code 3.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace plconj

#endif  // PLCONJ_ERROR_HPP_
