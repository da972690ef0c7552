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

#include <nlohmann/json.hpp>

#include "test_util.hpp"
#include "yul/renaming.hpp"
#include "yul/solc_json.hpp"

namespace yul {
namespace {

using nlohmann::json;
using test::P;

const char* const kPairs[] = {"literals", "nested", "disambiguated", "scoping", "statements"};

TEST_CASE("fixtures convert to the parse of their Yul text") {
  for (const char* name : kPairs) {
    CAPTURE(name);
    std::string base = test::Fixture(std::string("solc/") + name);
    auto converted = ConvertSolcJsonText(test::ReadText(base + ".json"));
    REQUIRE_MESSAGE(converted, converted.error().ToString());
    CHECK(*converted == P(test::ReadText(base + ".yul")));
    // Deterministic.
    CHECK(*ConvertSolcJsonText(test::ReadText(base + ".json")) == *converted);
  }
}

TEST_CASE("fixture pair across the disambiguator") {
  auto pair = ConvertSolcJsonPair(test::ReadText(test::Fixture("solc/scoping.json")),
                                  test::ReadText(test::Fixture("solc/disambiguated.json")));
  REQUIRE(pair);
  CHECK(CheckDisambiguation(pair->first, pair->second));
  auto same = ConvertSolcJsonPair(test::ReadText(test::Fixture("solc/nested.json")),
                                  test::ReadText(test::Fixture("solc/nested.json")));
  REQUIRE(same);
  CHECK(same->first == same->second);
  auto bad = ConvertSolcJsonPair(test::ReadText(test::Fixture("solc/nested.json")), "{ nope");
  REQUIRE_FALSE(bad);
  CHECK(bad.error().input == "new");
}

Result<Block, ConvertError> InBlock(json stmt) {
  return ConvertSolcJson(json{{"nodeType", "YulBlock"}, {"statements", json::array({std::move(stmt)})}});
}

TEST_CASE("single nodes") {
  auto brk = InBlock({{"nodeType", "YulBreak"}});
  REQUIRE(brk);
  CHECK(*brk == P("{ break }"));
  auto t = InBlock({{"nodeType", "YulVariableDeclaration"},
                    {"variables", json::array({{{"nodeType", "YulTypedName"}, {"name", "x"}, {"type", ""}}})},
                    {"value", {{"nodeType", "YulLiteral"}, {"kind", "bool"}, {"value", "true"}}}});
  REQUIRE(t);
  CHECK(*t == P("{ let x := true }"));
  auto hex = InBlock({{"nodeType", "YulExpressionStatement"},
                      {"expression",
                       {{"nodeType", "YulFunctionCall"},
                        {"functionName", {{"nodeType", "YulIdentifier"}, {"name", "f"}}},
                        {"arguments", json::array({{{"nodeType", "YulLiteral"}, {"kind", "number"}, {"value", "0xAb"}},
                                                   {{"nodeType", "YulLiteral"}, {"kind", "string"}, {"hexValue", "c0ff"}}})}}}});
  REQUIRE(hex);
  CHECK(*hex == P("{ f(0xAb, hex\"c0ff\") }"));
}

TEST_CASE("errors carry a path") {
  auto empty = ConvertSolcJson(json::object());
  REQUIRE_FALSE(empty);
  CHECK(empty.error().path == "/");
  auto unknown = InBlock({{"nodeType", "YulMagic"}});
  REQUIRE_FALSE(unknown);
  CHECK(unknown.error().path == "/statements/0");
  auto typed = InBlock({{"nodeType", "YulVariableDeclaration"},
                        {"variables", json::array({{{"nodeType", "YulTypedName"}, {"name", "x"}, {"type", "u256"}}})}});
  CHECK_FALSE(typed);
  auto badnum = InBlock({{"nodeType", "YulExpressionStatement"},
                         {"expression",
                          {{"nodeType", "YulFunctionCall"},
                           {"functionName", {{"nodeType", "YulIdentifier"}, {"name", "f"}}},
                           {"arguments", json::array({{{"nodeType", "YulLiteral"}, {"kind", "number"}, {"value", "1e3"}}})}}}});
  REQUIRE_FALSE(badnum);
  CHECK(badnum.error().path == "/statements/0/expression/arguments/0/value");
  auto malformed = ConvertSolcJsonText("{");
  REQUIRE_FALSE(malformed);
  CHECK(malformed.error().path == "/");
  CHECK_FALSE(ConvertSolcJson(json{{"sources", json::object()}}));
}

}  // namespace
}  // namespace yul
