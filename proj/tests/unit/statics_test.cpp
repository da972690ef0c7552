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
#include "yul/dialect.hpp"
#include "yul/statics.hpp"

namespace yul {
namespace {

using test::E;
using test::P;
using test::S;

const FunTable& Evm() {
  static const FunTable kTable = Dialect::EvmPure().Table();
  return kTable;
}

VarTable V(std::initializer_list<const char*> names) {
  VarTable v;
  for (const char* n : names) v.insert(Identifier(n));
  return v;
}

ErrorKind TopError(const std::string& src) {
  auto r = CheckSafeTop(P(src), Evm());
  REQUIRE_FALSE(r);
  return r.error().kind;
}

TEST_CASE("expressions") {
  CHECK(CheckSafeExpression(E("x"), V({"x"}), {}) == std::size_t{1});
  FunTable f{{Identifier("f"), FunType{1, 2}}};
  CHECK(CheckSafeExpression(E("f(x)"), V({"x"}), f) == std::size_t{2});
  auto arity = CheckSafeExpression(E("f(x, y)"), V({"x", "y"}), f);
  REQUIRE_FALSE(arity);
  CHECK(arity.error().kind == ErrorKind::kArityMismatch);
  CHECK(CheckSafeExpression(E("y"), V({"x"}), {}).error().kind == ErrorKind::kUnknownVar);
  CHECK(CheckSafeExpression(E("g()"), {}, {}).error().kind == ErrorKind::kUnknownFun);
  CHECK(CheckSafeExpression(E("a.b"), V({"a"}), {}).error().kind == ErrorKind::kBadPath);
  // Arguments are single-valued.
  CHECK(CheckSafeExpression(E("add(f(x), 1)"), V({"x"}), Evm()).has_value() == false);
}

TEST_CASE("statements") {
  auto let = CheckSafeStatement(S("let y := x"), V({"x"}), {});
  REQUIRE(let);
  CHECK(let->vars == V({"x", "y"}));
  CHECK(let->modes == ModeSet{Mode::kRegular});
  auto brk = CheckSafeStatement(S("break"), {}, {});
  REQUIRE(brk);
  CHECK(brk->modes == ModeSet{Mode::kBreak});
  CHECK(CheckSafeStatement(S("function f() { break }"), {}, {{Identifier("f"), {}}}).error().kind ==
        ErrorKind::kModeViolation);
  CHECK(CheckSafeStatement(S("let x"), V({"x"}), {}).error().kind == ErrorKind::kDuplicateVar);
  CHECK(CheckSafeStatement(S("let a, a := f()"), {}, {{Identifier("f"), FunType{0, 2}}}).error().kind ==
        ErrorKind::kDuplicateVar);
  CHECK(CheckSafeStatement(S("a, a := f()"), V({"a"}), {{Identifier("f"), FunType{0, 2}}}).error().kind ==
        ErrorKind::kDuplicateVar);
  CHECK(CheckSafeStatement(S("let a, b := f()"), {}, {{Identifier("f"), FunType{0, 3}}}).error().kind ==
        ErrorKind::kResultCountMismatch);
  CHECK(CheckSafeStatement(S("f()"), {}, {{Identifier("f"), FunType{0, 1}}}).error().kind ==
        ErrorKind::kResultCountMismatch);
  CHECK(CheckSafeStatement(S("if f() { }"), {}, {{Identifier("f"), FunType{0, 2}}}).error().kind ==
        ErrorKind::kNonSingleValue);
  CHECK(CheckSafeStatement(S("switch 1 case 1 { } case 0x01 { }"), {}, {}).error().kind ==
        ErrorKind::kDuplicateCase);
  CHECK(CheckSafeStatement(S("for { break } 1 { } { }"), {}, {}).error().kind == ErrorKind::kModeViolation);
  CHECK(CheckSafeStatement(S("for { } 1 { continue } { }"), {}, {}).error().kind ==
        ErrorKind::kModeViolation);
  auto loop = CheckSafeStatement(S("for { let i } i { } { break }"), {}, {});
  REQUIRE(loop);
  CHECK(loop->modes == ModeSet{Mode::kRegular});
  CHECK(loop->vars.empty());
  auto leave_loop = CheckSafeStatement(S("for { } 1 { } { leave }"), {}, {});
  REQUIRE(leave_loop);
  CHECK(leave_loop->modes == ModeSet{Mode::kRegular, Mode::kLeave});
  auto sw = CheckSafeStatement(S("switch x case 0 { break } default { }"), V({"x"}), {});
  REQUIRE(sw);
  CHECK(sw->modes == ModeSet{Mode::kRegular, Mode::kBreak});
  // No default: falling through is regular.
  auto nodefault = CheckSafeStatement(S("switch x case 0 { break }"), V({"x"}), {});
  REQUIRE(nodefault);
  CHECK(nodefault->modes == ModeSet{Mode::kRegular, Mode::kBreak});
}

TEST_CASE("blocks") {
  auto modes = CheckSafeBlock(P("{ let x := 1 break let y := 2 }"), {}, {});
  REQUIRE(modes);
  CHECK(*modes == ModeSet{Mode::kBreak});
  CHECK(CheckSafeBlock(Block{}, {}, {}) == ModeSet{Mode::kRegular});
  auto top = CheckSafeBlock(test::FixtureBlock("examples/scoping.yul"), {}, {});
  REQUIRE(top);
  CHECK(*top == ModeSet{Mode::kRegular});
  // Variables declared in a block are gone after it.
  auto scoped = CheckSafeBlock(P("{ { let x } x := 1 }"), {}, {});
  REQUIRE_FALSE(scoped);
  CHECK(scoped.error().kind == ErrorKind::kUnknownVar);
}

TEST_CASE("programs") {
  CHECK(TopError("{ leave }") == ErrorKind::kModeViolation);
  CHECK(TopError("{ break }") == ErrorKind::kModeViolation);
  CHECK(TopError("{ let x := add(x, 1) }") == ErrorKind::kUnknownVar);
  CHECK(CheckSafeTop(test::FixtureBlock("examples/scoping.yul"), Evm()));
  CHECK(CheckSafeTop(test::FixtureBlock("examples/disambiguated.yul"), Evm()));
  // Visibility: functions anywhere in their block, also before the
  // definition; variables only after their declaration.
  CHECK(CheckSafeTop(P("{ f() function f() { } }"), Evm()));
  CHECK(TopError("{ x := 1 let x }") == ErrorKind::kUnknownVar);
  // Accessibility: outer variables are not accessible in function bodies.
  CHECK(TopError("{ let x function f() { x := 1 } }") == ErrorKind::kUnknownVar);
  // But outer functions are.
  CHECK(CheckSafeTop(P("{ function f() { g() } function g() { } }"), Evm()));
  // h from f is not visible in g.
  CHECK(TopError("{ function f() { function h() { } } function g() { h() } }") ==
        ErrorKind::kUnknownFun);
  // No g inside f.
  CHECK(TopError("{ function f() { function g() { } } function g() { } }") == ErrorKind::kDuplicateFun);
  CHECK(TopError("{ function add(a, b) -> c { } }") == ErrorKind::kDuplicateFun);
  CHECK(TopError("{ let x { let x } }") == ErrorKind::kDuplicateVar);
  CHECK(TopError("{ function f(a, a) { } }") == ErrorKind::kDuplicateVar);
  CHECK(TopError("{ function f(a) -> a { } }") == ErrorKind::kDuplicateVar);
  // A function and a variable may share a name.
  CHECK(CheckSafeTop(P("{ let f function f() { } }"), Evm()));
  CHECK(CheckSafeTop(P("{ let x := 1 }"), Evm(), V({"x"})).error().kind == ErrorKind::kDuplicateVar);
  CHECK(CheckSafeTop(P("{ x := 1 }"), Evm(), V({"x"})));
}

TEST_CASE("function tables") {
  Block b = test::FixtureBlock("examples/scoping.yul");
  auto t = FunTableOf(b);
  REQUIRE(t);
  CHECK(*t == FunTable{{Identifier("f"), FunType{}}, {Identifier("g"), FunType{}}});
  CHECK(FunTableOf(Block{}) == FunTable{});
  CHECK(FunTableOf(P("{ function f() {} function f() {} }")).error().kind == ErrorKind::kDuplicateFun);
  CHECK(FunTableOf(P("{ function f(a, b) -> c { } }"))->at(Identifier("f")) == FunType{2, 1});
}

}  // namespace
}  // namespace yul
