// Copyright 2026 The LDP Bandits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LDPB_ERRORS_HPP_
#define LDPB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ldpb {

// Argument outside the mathematical domain of an operation (reward outside
// [0, 1], non-positive epsilon, shape parameter out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Environment with a zero minimum gap, or a privatized gap that is not
// positive. Problem-dependent bounds are undefined for these.
class DegenerateEnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed experiment configuration text or flag value.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ldpb

#endif  // LDPB_ERRORS_HPP_
