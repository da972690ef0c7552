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
#include "yul/testgen.hpp"
#include "yul/transforms.hpp"

namespace yul {
namespace {

TEST_CASE("generator") {
  const Dialect evm = Dialect::EvmPure();
  GenConfig cfg = GenConfig::Default();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    cfg.seed = seed;
    Block b = GenProgram(cfg, evm);
    CHECK(GenProgram(cfg, evm) == b);
    CHECK(CheckSafeTop(b, evm.Table()));
  }
  cfg.allow_fundefs = false;
  cfg.allow_loop_init = false;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    cfg.seed = seed;
    Block b = GenProgram(cfg, evm);
    CHECK(NoFun(b));
    CHECK(NoLoopInit(b));
  }
  cfg = GenConfig::Default();
  cfg.seed = 1;
  Block a = GenProgram(cfg, evm);
  cfg.seed = 2;
  CHECK_FALSE(GenProgram(cfg, evm) == a);
}

TEST_CASE("empty suites pass") {
  SuiteOptions opt;
  opt.n = 0;
  for (const std::string& name : SuiteNames()) {
    SuiteReport r = RunSuite(name, opt);
    CHECK(r.cases_run == 0);
    CHECK(r.passed());
  }
  CHECK_FALSE(IsSuite("nope"));
  CHECK_FALSE(RunSuite("nope", opt).passed());
}

TEST_CASE("parallel and serial runners agree") {
  SuiteOptions opt;
  opt.n = 24;
  opt.seed = 99;
  opt.mutate_skip_output_zeroing = true;
  for (const char* name : {"static-soundness", "renamevar", "roundtrip"}) {
    SuiteReport par = RunSuite(name, opt);
    SuiteReport ser = RunSuiteSerial(name, opt);
    CHECK(par.cases_run == ser.cases_run);
    CHECK(par.failures == ser.failures);
  }
}

TEST_CASE("the soundness suite catches a broken interpreter") {
  SuiteOptions opt;
  opt.n = 200;
  SuiteReport clean = RunSuite("static-soundness", opt);
  CHECK(clean.passed());
  opt.mutate_skip_output_zeroing = true;
  SuiteReport broken = RunSuite("static-soundness", opt);
  REQUIRE_FALSE(broken.passed());
  // Replay reproduces the failure from its case seed alone.
  std::string log;
  SuiteReport replay = ReplayCase("static-soundness", broken.failures.front().seed, opt, &log);
  CHECK_FALSE(replay.passed());
  CHECK(log.find("program:") != std::string::npos);
}

TEST_CASE("dead code needs nofun") {
  std::vector<SuiteFailure> f = CheckDeadCodeCase(NofunCounterexample(), {}, {64}, 0);
  CHECK_FALSE(f.empty());
  CHECK(test::P("{ for { } 1 { } { f() break function f() { } } }") == NofunCounterexample());
  SuiteOptions opt;
  opt.n = 20;
  opt.drop_nofun = true;
  CHECK_FALSE(RunSuite("dead-code", opt).passed());
  opt.drop_nofun = false;
  CHECK(RunSuite("dead-code", opt).passed());
}

TEST_CASE("dead code needs noloopinit for static preservation") {
  Block p = test::P("{ function f(c) { for { leave let y } c { } { y := 1 } } }");
  std::vector<SuiteFailure> f = CheckDeadCodeCase(p, {}, {64}, 0);
  REQUIRE_FALSE(f.empty());
  CHECK(f.front().property.find("static-preservation") == 0);
  CHECK(CheckDeadCodeCase(ForLoopInitRewrite(p), {}, {64}, 0).empty());
}

TEST_CASE("loop rewrite may drop the regular mode") {
  FunTable none;
  auto before = CheckSafeStatement(test::S("for { leave } 1 { } { }"), {}, none);
  auto after = CheckSafeStatement(ForLoopInitRewrite(test::S("for { leave } 1 { } { }")), {}, none);
  REQUIRE(before);
  REQUIRE(after);
  CHECK(before->modes == ModeSet{Mode::kRegular, Mode::kLeave});
  CHECK(after->modes == ModeSet{Mode::kLeave});
}

TEST_CASE("literal generator covers the bounds") {
  Rng rng(5);
  int rejected = 0;
  int accepted = 0;
  for (int i = 0; i < 2000; ++i) {
    if (CheckSafeLiteral(GenLiteral(rng))) {
      ++accepted;
    } else {
      ++rejected;
    }
  }
  CHECK(rejected > 0);
  CHECK(accepted > rejected);
}

TEST_CASE("small runs of every suite pass") {
  SuiteOptions opt;
  opt.n = 15;
  opt.seed = 7;
  for (const std::string& name : SuiteNames()) {
    CAPTURE(name);
    SuiteReport r = RunSuite(name, opt);
    CHECK_MESSAGE(r.passed(), r.ToString(3));
  }
}

}  // namespace
}  // namespace yul
