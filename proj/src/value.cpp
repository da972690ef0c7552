// Copyright 2026 The Yulkit Authors
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
#include "yul/value.hpp"

#include <cctype>

namespace yul {

using boost::multiprecision::cpp_int;

std::string ToDecimal(const Value& v) { return v.str(); }

std::string ToHex(const Value& v) {
  if (v == 0) return "0x0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  Value x = v;
  while (x != 0) {
    out.push_back(kDigits[static_cast<unsigned>(x & 0xf)]);
    x >>= 4;
  }
  return "0x" + std::string(out.rbegin(), out.rend());
}

std::optional<Value> ParseValue(std::string_view text) {
  cpp_int acc = 0;
  const cpp_int limit = cpp_int(1) << 256;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    for (char c : text.substr(2)) {
      if (!std::isxdigit(static_cast<unsigned char>(c))) return std::nullopt;
      int d = std::isdigit(static_cast<unsigned char>(c))
                  ? c - '0'
                  : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
      acc = acc * 16 + d;
      if (acc >= limit) return std::nullopt;
    }
  } else {
    if (text.empty()) return std::nullopt;
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      acc = acc * 10 + (c - '0');
      if (acc >= limit) return std::nullopt;
    }
  }
  return static_cast<Value>(acc);
}

}  // namespace yul
