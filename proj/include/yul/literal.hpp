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
#ifndef YUL_LITERAL_HPP_
#define YUL_LITERAL_HPP_

#include <string>

#include "yul/ast.hpp"
#include "yul/errors.hpp"
#include "yul/result.hpp"
#include "yul/value.hpp"

namespace yul {

// How quoted and hex strings become values.
enum class StringAlignment {
  // Big-endian base-256 integer of the bytes, no padding.
  kBase256,
  // Bytes left-aligned in a 32-byte word (right zero padding), as solc does.
  kLeftAlign32,
};

// The bytes a string literal denotes, after escape resolution. Empty for
// non-string literals.
std::string LiteralBytes(const Literal& lit);

// Value of a literal. Fails with kLiteralTooLarge for numbers of 2^256 or
// more and kStringTooLong for strings of more than 32 bytes.
Result<Value, ErrorKind> LiteralValue(
    const Literal& lit, StringAlignment alignment = StringAlignment::kBase256);

}  // namespace yul

#endif  // YUL_LITERAL_HPP_
