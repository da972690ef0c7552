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
#ifndef YUL_VALUE_HPP_
#define YUL_VALUE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace yul {

// The single Yul type of the EVM dialect: a 256-bit unsigned integer with
// wrap-around arithmetic.
using Value = boost::multiprecision::uint256_t;

std::string ToDecimal(const Value& v);
std::string ToHex(const Value& v);  // 0x-prefixed, lowercase, no padding

// Parses a decimal or 0x-prefixed hex string. Returns nullopt on malformed
// input or on a value of 2^256 or more.
std::optional<Value> ParseValue(std::string_view text);

}  // namespace yul

#endif  // YUL_VALUE_HPP_
