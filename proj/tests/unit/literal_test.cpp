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

#include <doctest.h>

#include <string>

#include "test_util.hpp"
#include "yul/dialect.hpp"
#include "yul/dynamics.hpp"
#include "yul/literal.hpp"
#include "yul/statics.hpp"
#include "yul/value.hpp"

namespace yul {
namespace {

// Independent oracles: digit-by-digit accumulation in the 256-bit type,
// with no knowledge of the literal representation.
Value FromHexDigits(const std::string& digits) {
  Value v = 0;
  for (char c : digits) {
    int d = std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : (std::tolower(c) - 'a' + 10);
    v = v * 16 + d;
  }
  return v;
}

Value FromBytes(const std::string& bytes) {
  Value v = 0;
  for (unsigned char c : bytes) v = v * 256 + c;
  return v;
}

Value Lit(const std::string& text, StringAlignment a = StringAlignment::kBase256) {
  auto e = test::E(text);
  auto v = LiteralValue(std::get<Literal>(e.node), a);
  REQUIRE(v);
  return *v;
}

TEST_CASE("literal values") {
  CHECK(Lit("true") == 1);
  CHECK(Lit("false") == 0);
  CHECK(Lit("64738") == 64738);
  CHECK(Lit("0xff0012") == 16711698);
  CHECK(Lit("0xff0012") == FromHexDigits("ff0012"));
  CHECK(Lit("hex\"90a4\"") == 37028);
  CHECK(Lit("hex\"90a4\"") == FromBytes(std::string("\x90\xa4", 2)));
  CHECK(Lit("\"ab\"") == FromBytes("ab"));
  CHECK(Lit("\"\\n\\x00\\\\\"") == FromBytes(std::string("\n\0\\", 3)));
  CHECK(Lit("\"\"") == 0);
  CHECK(Lit("0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF") == ~Value(0));
  CHECK(Lit("115792089237316195423570985008687907853269984665640564039457584007913129639935") == ~Value(0));
  // Left-aligned 32-byte words, as solc reads them.
  CHECK(Lit("\"a\"", StringAlignment::kLeftAlign32) == FromBytes("a") << 248);
  CHECK(Lit("hex\"90a4\"", StringAlignment::kLeftAlign32) == Value(37028) << 240);
  // PUSH32 operand solc 0.8.26 emits for `sstore(0, "ab")`.
  CHECK(Lit("\"ab\"", StringAlignment::kLeftAlign32) ==
        FromHexDigits("6162000000000000000000000000000000000000000000000000000000000000"));
}

TEST_CASE("literal bounds") {
  auto lit = [](const std::string& text) { return std::get<Literal>(test::E(text).node); };
  const std::string two256 =
      "115792089237316195423570985008687907853269984665640564039457584007913129639936";
  CHECK_FALSE(CheckSafeLiteral(lit(two256)));
  CHECK(CheckSafeLiteral(lit(two256)).error().kind == ErrorKind::kLiteralTooLarge);
  CHECK_FALSE(LiteralValue(lit(two256)));
  CHECK(CheckSafeLiteral(lit("0x" + std::string(64, 'f'))));
  CHECK(CheckSafeLiteral(lit("0x00" + std::string(64, 'f'))));
  CHECK_FALSE(CheckSafeLiteral(lit("0x1" + std::string(64, '0'))));
  CHECK(CheckSafeLiteral(lit("\"" + std::string(32, 'a') + "\"")));
  auto long_string = CheckSafeLiteral(lit("\"" + std::string(33, 'a') + "\""));
  REQUIRE_FALSE(long_string);
  CHECK(long_string.error().kind == ErrorKind::kStringTooLong);
  CHECK_FALSE(CheckSafeLiteral(lit("hex\"" + std::string(66, '1') + "\"")));
  CHECK(CheckSafeLiteral(lit("hex\"" + std::string(64, '1') + "\"")));
}

TEST_CASE("value formatting") {
  CHECK(ToDecimal(Value(0)) == "0");
  CHECK(ToHex(Value(255)) == "0xff");
  CHECK(ParseValue("0x10") == Value(16));
  CHECK(ParseValue("42") == Value(42));
  CHECK_FALSE(ParseValue("x"));
  CHECK_FALSE(ParseValue(
      "115792089237316195423570985008687907853269984665640564039457584007913129639936"));
}

std::vector<Value> Call(const std::string& name, std::vector<Value> args) {
  const Builtin* b = Dialect::EvmPure().Find(Identifier(name));
  REQUIRE(b != nullptr);
  return b->eval(args);
}

TEST_CASE("pure builtins") {
  const Value max = ~Value(0);
  CHECK(Call("add", {max, 1}) == std::vector<Value>{0});
  CHECK(Call("add", {1, 2}) == std::vector<Value>{3});
  CHECK(Call("sub", {0, 1}) == std::vector<Value>{max});
  CHECK(Call("mul", {max, 2}) == std::vector<Value>{max - 1});
  CHECK(Call("div", {7, 0}) == std::vector<Value>{0});
  CHECK(Call("div", {7, 2}) == std::vector<Value>{3});
  CHECK(Call("mod", {7, 0}) == std::vector<Value>{0});
  CHECK(Call("mod", {7, 4}) == std::vector<Value>{3});
  CHECK(Call("lt", {1, 2}) == std::vector<Value>{1});
  CHECK(Call("gt", {1, 2}) == std::vector<Value>{0});
  CHECK(Call("eq", {5, 5}) == std::vector<Value>{1});
  CHECK(Call("iszero", {0}) == std::vector<Value>{1});
  CHECK(Call("not", {0}) == std::vector<Value>{max});
  CHECK(Call("and", {6, 3}) == std::vector<Value>{2});
  CHECK(Call("or", {6, 3}) == std::vector<Value>{7});
  CHECK(Call("xor", {6, 3}) == std::vector<Value>{5});
  CHECK(Call("shl", {4, 1}) == std::vector<Value>{16});
  CHECK(Call("shr", {4, 32}) == std::vector<Value>{2});
  CHECK(Call("shl", {256, 1}) == std::vector<Value>{0});
  CHECK(Call("shr", {300, max}) == std::vector<Value>{0});
  FunTable t = Dialect::EvmPure().Table();
  CHECK(t.size() == 15);
  CHECK(t.at(Identifier("iszero")) == FunType{1, 1});
  CHECK(t.at(Identifier("add")) == FunType{2, 1});
  REQUIRE(Dialect::ByName("none") != nullptr);
  CHECK(Dialect::ByName("none")->Table().empty());
  CHECK(Dialect::ByName("evm") == nullptr);
}

}  // namespace
}  // namespace yul
