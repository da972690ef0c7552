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
#include "yul/literal.hpp"

#include "yul/visit.hpp"

namespace yul {
namespace {

using boost::multiprecision::cpp_int;

int HexDigitValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return c - 'A' + 10;
}

Result<Value, ErrorKind> FromBytes(const std::string& bytes,
                                   StringAlignment alignment) {
  if (bytes.size() > 32) return Unexpected{ErrorKind::kStringTooLong};
  Value v = 0;
  for (char c : bytes) v = (v << 8) | static_cast<unsigned char>(c);
  if (alignment == StringAlignment::kLeftAlign32 && !bytes.empty()) {
    v <<= 8 * (32 - bytes.size());
  }
  return v;
}

Result<Value, ErrorKind> FromDigits(const std::string& digits, int base) {
  cpp_int acc = 0;
  for (char c : digits) acc = acc * base + HexDigitValue(c);
  if (acc >= (cpp_int(1) << 256)) return Unexpected{ErrorKind::kLiteralTooLarge};
  return static_cast<Value>(acc);
}

}  // namespace

std::string LiteralBytes(const Literal& lit) {
  std::string bytes;
  if (const auto* s = std::get_if<PlainString>(&lit.value)) {
    for (const StringElement& e : s->elements) {
      bytes.push_back(static_cast<char>(e.byte));
    }
  } else if (const auto* h = std::get_if<HexString>(&lit.value)) {
    for (size_t i = 0; i + 1 < h->digits.size(); i += 2) {
      bytes.push_back(static_cast<char>(HexDigitValue(h->digits[i]) * 16 +
                                        HexDigitValue(h->digits[i + 1])));
    }
  }
  return bytes;
}

Result<Value, ErrorKind> LiteralValue(const Literal& lit,
                                      StringAlignment alignment) {
  return Visit(
      lit.value,
      [](const BoolLiteral& b) -> Result<Value, ErrorKind> {
        return Value(b.value ? 1 : 0);
      },
      [](const DecNumber& d) { return FromDigits(d.digits, 10); },
      [](const HexNumber& h) { return FromDigits(h.digits, 16); },
      [&](const auto&) { return FromBytes(LiteralBytes(lit), alignment); });
}

}  // namespace yul
