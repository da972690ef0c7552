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
#include "yul/transforms.hpp"

namespace yul {
namespace {

using test::P;
using test::S;

TEST_CASE("loop initializer rewrite") {
  CHECK(ForLoopInitRewrite(P("{ for { let i := 0 } lt(i, 3) { i := add(i, 1) } { f(i) } }")) ==
        P("{ { let i := 0 for { } lt(i, 3) { i := add(i, 1) } { f(i) } } }"));
  Block empty_init = P("{ for { } 1 { } { } }");
  CHECK(ForLoopInitRewrite(empty_init) == empty_init);
  Block once = ForLoopInitRewrite(P("{ for { let i } i { } { for { let j } j { } { } } }"));
  CHECK(once == P("{ { let i for { } i { } { { let j for { } j { } { } } } } }"));
  CHECK(ForLoopInitRewrite(once) == once);
  Block plain = P("{ let x if x { x := 2 } function f() { } }");
  CHECK(ForLoopInitRewrite(plain) == plain);
  // Definitions in the initializer move along with it.
  CHECK(ForLoopInitRewrite(S("for { function g() { } } 1 { } { g() }")) ==
        S("{ function g() { } for { } 1 { } { g() } }"));
  CHECK(ForLoopInitRewrite(test::FixtureBlock("examples/loop_init_before.yul")) ==
        test::FixtureBlock("examples/loop_init_after.yul"));
}

TEST_CASE("dead code elimination") {
  CHECK(DeadCodeEliminate(P("{ let a := 1 break a := 2 let b }")) == P("{ let a := 1 break }"));
  CHECK(DeadCodeEliminate(P("{ if c { leave x := 1 } y := 2 }")) == P("{ if c { leave } y := 2 }"));
  Block live = P("{ let a := 1 if a { a := 2 } }");
  CHECK(DeadCodeEliminate(live) == live);
  CHECK(DeadCodeEliminate(P("{ for { } 1 { } { continue break } }")) == P("{ for { } 1 { } { continue } }"));
  CHECK(DeadCodeEliminate(P("{ function f() { leave leave } }")) == P("{ function f() { leave } }"));
  CHECK(DeadCodeEliminate(P("{ switch x case 1 { break x := 1 } default { continue x := 2 } }")) ==
        P("{ switch x case 1 { break } default { continue } }"));
  CHECK(DeadCodeEliminate(test::FixtureBlock("examples/dead_code_before.yul")) ==
        test::FixtureBlock("examples/dead_code_after.yul"));
  CHECK(StatementDead(S("{ break break }")) == S("{ break }"));
}

TEST_CASE("restrictions") {
  CHECK_FALSE(NoFun(P("{ function f() {} }")));
  CHECK(NoFun(P("{ for {} c {} { break } }")));
  CHECK_FALSE(NoFun(test::FixtureBlock("examples/scoping.yul")));
  CHECK_FALSE(NoLoopInit(P("{ for { let i } i { } { } }")));
  CHECK(NoLoopInit(P("{ let x }")));
  CHECK(NoLoopInit(ForLoopInitRewrite(P("{ for { let i } i { } { for { let j } j { } { } } }"))));
  CHECK_FALSE(NoLoopInit(P("{ function f() { for { let i } i { } { } } }")));
}

TEST_CASE("environment transforms") {
  CHECK(FunEnvDead(FunEnv{}) == FunEnv{});
  CHECK(FunEnvNoFun(FunEnv{}));
  CHECK(FunEnvNoLoopInit(FunEnv{}));
  FunEnv env;
  env.Push(ScopeOf(P("{ function f() { for { } 1 { } { break f() } } }")));
  FunEnv dead = FunEnvDead(env);
  const FunInfo* info = dead.Find(Identifier("f"));
  REQUIRE(info != nullptr);
  CHECK(*info->body == P("{ for { } 1 { } { break } }"));
  CHECK(FunEnvNoFun(env));
  FunEnv nested;
  nested.Push(ScopeOf(P("{ function f() { function g() { } } }")));
  CHECK_FALSE(FunEnvNoFun(nested));
  FunEnv loops;
  loops.Push(ScopeOf(P("{ function f() { for { let i } i { } { } } }")));
  CHECK_FALSE(FunEnvNoLoopInit(loops));
  CHECK(FunEnvNoLoopInit(FunEnvLoopInitRewrite(loops)));
}

TEST_CASE("transforms preserve outcomes on the fixtures") {
  const Dialect evm = Dialect::EvmPure();
  for (const auto& [before, after] :
       {std::pair{"examples/dead_code_before.yul", "examples/dead_code_after.yul"},
        std::pair{"examples/loop_init_before.yul", "examples/loop_init_after.yul"}}) {
    Block a = test::FixtureBlock(before);
    Block b = test::FixtureBlock(after);
    for (std::uint64_t fuel : {1, 5, 10, 20, 40, 100, 1000}) {
      CHECK(OkEq(ExecTop(a, {}, evm, fuel), ExecTop(b, {}, evm, fuel)));
    }
    CHECK(ExecTop(a, {}, evm, 1000));
  }
}

}  // namespace
}  // namespace yul
