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

#include "test_util.hpp"
#include "yul/ast.hpp"
#include "yul/syntax.hpp"

namespace yul {
namespace {

using test::P;
using test::S;

template <typename T>
bool TokenIs(const Token& t, const T& v) {
  const T* p = std::get_if<T>(&t.value);
  return p != nullptr && *p == v;
}

TEST_CASE("lexing: longest match and keywords") {
  auto t = Lex("xy");
  REQUIRE(t);
  REQUIRE(t->size() == 1);
  CHECK(TokenIs(t->front(), Identifier("xy")));

  t = Lex("let x := 0xff0012");
  REQUIRE(t);
  REQUIRE(t->size() == 4);
  CHECK(TokenIs((*t)[0], Keyword::kLet));
  CHECK(TokenIs((*t)[1], Identifier("x")));
  CHECK(TokenIs((*t)[2], Symbol::kAssign));
  CHECK(TokenIs((*t)[3], MakeHex("ff0012")));

  t = Lex("");
  REQUIRE(t);
  CHECK(t->empty());

  // Keywords are whole words only.
  t = Lex("letx leave");
  REQUIRE(t);
  CHECK(TokenIs((*t)[0], Identifier("letx")));
  CHECK(TokenIs((*t)[1], Keyword::kLeave));

  t = Lex("a.b $c_1");
  REQUIRE(t);
  CHECK(t->size() == 4);
}

TEST_CASE("lexing: comments, positions and errors") {
  auto t = Lex("// c\n/* x\n */ let");
  REQUIRE(t);
  REQUIRE(t->size() == 1);
  CHECK(t->front().pos == SourcePos{3, 5});

  CHECK_FALSE(Lex("0x"));
  CHECK_FALSE(Lex("012"));
  CHECK_FALSE(Lex("12ab"));
  CHECK_FALSE(Lex("\"abc"));
  CHECK_FALSE(Lex("\"\\u0041\""));
  CHECK_FALSE(Lex("hex\"abc\""));
  CHECK_FALSE(Lex("hex\"zz\""));
  CHECK_FALSE(Lex("/* open"));
  CHECK_FALSE(Lex("x : y"));
  CHECK_FALSE(Lex("#"));
  auto err = Lex("let x := 0x");
  REQUIRE_FALSE(err);
  CHECK(err.error().ToString().rfind("1:", 0) == 0);
}

TEST_CASE("lexing: string elements") {
  auto t = Lex(R"("a\x41\n\"'" 'q\'' hex'0A')");
  REQUIRE(t);
  REQUIRE(t->size() == 3);
  const auto& s = std::get<PlainString>(std::get<Literal>((*t)[0].value).value);
  REQUIRE(s.elements.size() == 5);
  CHECK(s.elements[1] == StringElement::Hex(0x41));
  CHECK(s.elements[2] == StringElement::Escape(StringElement::Kind::kNewline));
  const auto& h = std::get<HexString>(std::get<Literal>((*t)[2].value).value);
  CHECK(h.digits == "0A");
}

TEST_CASE("parsing: statements") {
  Block b = P("{ let x function f () { } }");
  REQUIRE(b.statements.size() == 2);
  CHECK(S("let x") == Statement{VariableSingle{Identifier("x"), std::nullopt}});
  CHECK(b.statements[1] == Statement{FunDef{Identifier("f"), {}, {}, Block{}}});

  Statement loop = S("for { let i } lt(i, n) { } { }");
  Block init;
  init.statements.push_back(Statement{VariableSingle{Identifier("i"), std::nullopt}});
  For expected{init, CallExpr("lt", {PathExpr("i"), PathExpr("n")}), Block{}, Block{}};
  CHECK(loop == Statement{expected});
  CHECK(Print(loop) == "for { let i } lt(i, n) { } { }");

  CHECK(P("{ }") == Block{});
  Block leave = P("{ leave }");
  REQUIRE(leave.statements.size() == 1);
  CHECK(Holds<Leave>(leave.statements[0]));

  CHECK(Holds<AssignMulti>(S("a, b := f()")));
  CHECK(Holds<VariableMulti>(S("let a, b := f()")));
  CHECK(Holds<FunCallStatement>(S("f(1, g(2))")));
  Statement sw = S("switch x case 0 { } case \"a\" { } default { }");
  REQUIRE(Holds<Switch>(sw));
  CHECK(As<Switch>(sw)->cases.size() == 2);
  CHECK(As<Switch>(sw)->default_block.has_value());
  CHECK(Holds<AssignSingle>(S("a.b := 1")));
}

TEST_CASE("parsing: rejections") {
  CHECK_FALSE(ParseProgram("{ } {"));
  CHECK_FALSE(ParseProgram("{ let a, b := 1 }"));
  CHECK_FALSE(ParseProgram("{ a, b := c }"));
  CHECK_FALSE(ParseProgram("{ switch x }"));
  CHECK_FALSE(ParseProgram("{ x }"));
  CHECK_FALSE(ParseProgram("{ a.b() }"));
  CHECK_FALSE(ParseProgram("{ let x:u256 }"));
  CHECK_FALSE(ParseProgram("{ let let }"));
  CHECK_FALSE(ParseProgram("{ function f(a,) { } }"));
  CHECK_FALSE(ParseProgram(""));
  auto err = ParseProgram("{ } {");
  REQUIRE_FALSE(err);
  CHECK(err.error().ToString() == "1:5: expected end of input, found '{'");
  std::string deep(2000, '{');
  deep += std::string(2000, '}');
  CHECK_FALSE(ParseProgram(deep));
}

TEST_CASE("parsing: the scoping listing nests blocks 1 to 4") {
  Block b = test::FixtureBlock("examples/scoping.yul");
  REQUIRE(b.statements.size() == 3);
  const FunDef* f = As<FunDef>(b.statements[1]);
  const FunDef* g = As<FunDef>(b.statements[2]);
  REQUIRE(f != nullptr);
  REQUIRE(g != nullptr);
  CHECK(f->name == Identifier("f"));
  REQUIRE(f->body.statements.size() == 3);
  CHECK(Holds<FunDef>(f->body.statements[0]));
  CHECK(Holds<Block>(f->body.statements[2]));
  REQUIRE(g->body.statements.size() == 2);
  CHECK(Holds<VariableSingle>(g->body.statements[0]));
}

TEST_CASE("printing") {
  CHECK(Print(S("let x")) == "let x");
  CHECK(Print(S("x := 17")) == "x := 17");
  CHECK(Print(Block{}) == "{ }");
  Block b = P("{ let x } ");
  CHECK(Print(b) == "{ let x }");
  CHECK(PrintPretty(P("{ if 1 { } }")) == "{\n    if 1 { }\n}\n");
  for (const char* src : {"{ let s := \"a\\x00\\\\\\\"\" let h := hex\"00FF\" }",
                          "{ for { } 1 { } { break continue } }",
                          "{ function f(a, b) -> c, d { leave } }",
                          "{ switch 0x01 case true { } default { let q := false } }"}) {
    Block parsed = P(src);
    CHECK(P(Print(parsed)) == parsed);
    CHECK(P(PrintPretty(parsed)) == parsed);
  }
}

TEST_CASE("declared names and hoisting") {
  Block b = test::FixtureBlock("examples/scoping.yul");
  DeclaredNames n = CollectDeclaredNames(b);
  CHECK(n.variables == std::set<Identifier>{Identifier("x"), Identifier("y"), Identifier("z")});
  CHECK(n.functions == std::set<Identifier>{Identifier("f"), Identifier("g"), Identifier("h")});
  CHECK(CollectDeclaredNames(Block{}).variables.empty());
  CHECK(CollectDeclaredNames(P("{ let a let a }")).variables.size() == 1);

  auto top = HoistedFunDefs(b);
  REQUIRE(top.size() == 2);
  CHECK(top[0]->name == Identifier("f"));
  CHECK(top[1]->name == Identifier("g"));
  auto inner = HoistedFunDefs(top[0]->body);
  REQUIRE(inner.size() == 1);
  CHECK(inner[0]->name == Identifier("h"));
  CHECK(HoistedFunDefs(P("{ if c { function f() {} } }")).empty());
}

}  // namespace
}  // namespace yul
