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
#include "yul/dynamics.hpp"

namespace yul {
namespace {

using test::E;
using test::P;
using test::S;

const Dialect& Evm() {
  static const Dialect kDialect = Dialect::EvmPure();
  return kDialect;
}

CState C(std::initializer_list<std::pair<const char*, unsigned>> vars) {
  CState c;
  for (const auto& [k, v] : vars) c.local[Identifier(k)] = v;
  return c;
}

StmtResult Top(const std::string& src, std::uint64_t fuel = 1000, const CState& init = {}) {
  return ExecTop(P(src), init, Evm(), fuel);
}

std::string SafetyKind(const StmtResult& r) {
  REQUIRE_FALSE(r);
  return r.error().ClassName();
}

TEST_CASE("expressions") {
  auto r = ExecExpression(E("x"), C({{"x", 7}}), FunEnv{}, Evm(), 10);
  REQUIRE(r);
  CHECK(r->values == std::vector<Value>{7});
  CHECK(r->cstate == C({{"x", 7}}));
  CHECK(ExecExpression(E("1"), {}, FunEnv{}, Evm(), 0).error().IsLimit());
  auto add = ExecExpression(E("add(1, 2)"), {}, FunEnv{}, Evm(), 10);
  REQUIRE(add);
  CHECK(add->values == std::vector<Value>{3});
  auto wrap = ExecExpression(E("add(0xffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff, 1)"), {},
                             FunEnv{}, Evm(), 10);
  REQUIRE(wrap);
  CHECK(wrap->values == std::vector<Value>{0});
  auto arity = ExecExpression(E("add(1)"), {}, FunEnv{}, Evm(), 10);
  REQUIRE_FALSE(arity);
  CHECK(arity.error().kind == ErrorKind::kArityMismatch);
  CHECK(ExecExpression(E("y"), {}, FunEnv{}, Evm(), 10).error().kind == ErrorKind::kUnknownVar);
  CHECK(ExecExpression(E("true"), {}, FunEnv{}, Evm(), 10)->values == std::vector<Value>{1});
}

TEST_CASE("function calls") {
  FunEnv env;
  env.Push(ScopeOf(P("{ function f() -> a, b { a := 1 } function g() -> c { leave c := 5 }"
                     " function k() { break } }")));
  auto f = ExecExpression(E("f()"), {}, env, Evm(), 100);
  REQUIRE(f);
  CHECK(f->values == std::vector<Value>{1, 0});
  auto g = ExecExpression(E("g()"), {}, env, Evm(), 100);
  REQUIRE(g);
  CHECK(g->values == std::vector<Value>{0});
  auto k = ExecStatement(S("k()"), {}, env, Evm(), 100);
  REQUIRE_FALSE(k);
  CHECK(k.error().kind == ErrorKind::kFunctionModeError);

  // The callee sees only its defining scope: f runs with block 1's scope,
  // so k (defined inside g) is out of reach.
  CHECK(SafetyKind(Top("{ function f() { k() } function g() { function k() { } function h() { f() } h() } g() }")) ==
        "safety:unknown-fun");
  auto ok = Top("{ function f() -> r { r := 1 } function g() -> s { function h() -> t { t := f() } s := h() }"
                " let x := g() }");
  REQUIRE(ok);
  CHECK(ok->cstate == C({{"x", 1}}));
  // Recursion consumes fuel.
  CHECK(Top("{ function f() { f() } f() }", 500).error().IsLimit());
  auto fib = Top("{ function fib(n) -> r { switch lt(n, 2) case 1 { r := n } default {"
                 " r := add(fib(sub(n, 1)), fib(sub(n, 2))) } } let x := fib(10) }",
                 10000);
  REQUIRE(fib);
  CHECK(fib->cstate == C({{"x", 55}}));
}

TEST_CASE("statements") {
  auto leave = ExecStatement(S("leave"), C({{"q", 3}}), FunEnv{}, Evm(), 5);
  REQUIRE(leave);
  CHECK(leave->mode == Mode::kLeave);
  CHECK(leave->cstate == C({{"q", 3}}));
  auto let = ExecStatement(S("let a, b"), {}, FunEnv{}, Evm(), 5);
  REQUIRE(let);
  CHECK(let->cstate == C({{"a", 0}, {"b", 0}}));
  auto loop = ExecStatement(S("for { let i := 0 } lt(i, 3) { i := add(i, 1) } { }"), {}, FunEnv{}, Evm(), 1000);
  REQUIRE(loop);
  CHECK(loop->mode == Mode::kRegular);
  CHECK(loop->cstate.local.count(Identifier("i")) == 0);
  auto blk = ExecStatement(S("{ let x := 1 break let y := 2 }"), {}, FunEnv{}, Evm(), 100);
  REQUIRE(blk);
  CHECK(blk->mode == Mode::kBreak);
  CHECK(blk->cstate.local.empty());
  auto empty = ExecStatement(S("{ }"), C({{"x", 1}}), FunEnv{}, Evm(), 5);
  REQUIRE(empty);
  CHECK(empty->cstate == C({{"x", 1}}));
  auto assign = ExecStatement(S("x := 17"), C({{"x", 1}}), FunEnv{}, Evm(), 5);
  REQUIRE(assign);
  CHECK(assign->cstate == C({{"x", 17}}));
  CHECK(ExecStatement(S("x := 17"), {}, FunEnv{}, Evm(), 5).error().kind == ErrorKind::kUnknownVar);
  CHECK(ExecStatement(S("let x := 1"), C({{"x", 1}}), FunEnv{}, Evm(), 5).error().kind ==
        ErrorKind::kDuplicateVar);
  auto sw = Top("{ let r switch 0x02 case 1 { r := 10 } case 2 { r := 20 } default { r := 30 } }");
  REQUIRE(sw);
  CHECK(sw->cstate == C({{"r", 20}}));
  auto sw_default = Top("{ let r switch 9 case 1 { r := 10 } default { r := 30 } }");
  REQUIRE(sw_default);
  CHECK(sw_default->cstate == C({{"r", 30}}));
  auto iff = Top("{ let r if 5 { r := 1 } if 0 { r := 2 } }");
  REQUIRE(iff);
  CHECK(iff->cstate == C({{"r", 1}}));
  auto cont = Top("{ let s for { let i := 0 } lt(i, 5) { i := add(i, 1) } {"
                  " if eq(i, 1) { continue } if eq(i, 3) { break } s := add(s, i) } }");
  REQUIRE(cont);
  CHECK(cont->cstate == C({{"s", 2}}));
  CHECK(Top("{ function f() { } function f() { } }").error().kind == ErrorKind::kDuplicateFun);
  CHECK(Top("{ function f() { function g() { } } function g() { } f() }").error().kind ==
        ErrorKind::kDuplicateFun);
}

TEST_CASE("programs") {
  auto scoping = Top(test::ReadText(test::Fixture("examples/scoping.yul")), 100);
  REQUIRE(scoping);
  CHECK(scoping->mode == Mode::kRegular);
  CHECK(scoping->cstate == C({{"x", 0}}));
  CHECK(SafetyKind(Top("{ break }")) == "safety:mode-violation");
  for (const char* src : {"{ }", "{ let x }", "{ for { } 1 { } { } }"}) {
    CHECK(Top(src, 0).error().IsLimit());
  }
  CHECK(Top("{ for { } 1 { } { } }", 100000).error().IsLimit());
  auto init = Top("{ x := add(x, 1) }", 10, C({{"x", 41}}));
  REQUIRE(init);
  CHECK(init->cstate == C({{"x", 42}}));
}

TEST_CASE("fuel accounting") {
  // One unit per exec entry: a literal at fuel 1, a let around it at 2,
  // the top block at 3.
  CHECK(ExecExpression(E("1"), {}, FunEnv{}, Evm(), 1));
  CHECK(ExecStatement(S("let x := 1"), {}, FunEnv{}, Evm(), 1).error().IsLimit());
  CHECK(ExecStatement(S("let x := 1"), {}, FunEnv{}, Evm(), 2));
  CHECK(Top("{ let x := 1 }", 2).error().IsLimit());
  CHECK(Top("{ let x := 1 }", 3));
}

TEST_CASE("state abstractions") {
  CHECK(CStateToVars(C({{"x", 7}, {"y", 0}})) == VarTable{Identifier("x"), Identifier("y")});
  CHECK(CStateToVars({}).empty());
  CHECK(FunEnvToFunTable(FunEnv{}).empty());
  FunEnv env;
  env.Push(ScopeOf(P("{ function f() { } }")));
  env.Push(ScopeOf(P("{ function h(a) -> b { } }")));
  CHECK(FunEnvToFunTable(env) ==
        FunTable{{Identifier("f"), FunType{0, 0}}, {Identifier("h"), FunType{1, 1}}});
}

TEST_CASE("okeq") {
  StmtResult a = SOutcome{C({{"x", 1}}), Mode::kRegular};
  StmtResult b = SOutcome{C({{"x", 1}}), Mode::kRegular};
  StmtResult c = SOutcome{C({{"x", 2}}), Mode::kRegular};
  StmtResult lim = Unexpected{EvalError::Limit()};
  StmtResult unsafe = Unexpected{EvalError::Safety(ErrorKind::kUnknownVar, "x")};
  CHECK(OkEq(a, b));
  CHECK_FALSE(OkEq(a, c));
  CHECK(OkEq(lim, unsafe));
  CHECK_FALSE(OkEq(a, lim));
}

}  // namespace
}  // namespace yul
