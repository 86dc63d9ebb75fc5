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

#ifndef LDPB_FORMAT_HPP_
#define LDPB_FORMAT_HPP_

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

namespace ldpb {

// Shortest decimal text that parses back to the same double; "inf", "-inf"
// and "nan" for the non-finite values.
inline std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Parses a full decimal token; "inf" is accepted. False on trailing junk.
inline bool ParseDouble(std::string_view s, double& out) {
  if (s == "inf" || s == "+inf" || s == "infinity") {
    out = HUGE_VAL;
    return true;
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace ldpb

#endif  // LDPB_FORMAT_HPP_
