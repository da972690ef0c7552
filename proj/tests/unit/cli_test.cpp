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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"
#include "test_util.hpp"

namespace yul {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::Main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("yulkit_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string F(const char* rel) { return test::Fixture(rel); }

TEST_CASE("parse") {
  Run r = Cli({"parse", Temp("a.yul", "{ let x }")});
  CHECK(r.code == 0);
  CHECK(r.out == "{ let x }\n");
  r = Cli({"parse", Temp("b.yul", "{ let }")});
  CHECK(r.code == 2);
  CHECK(r.err.find("expected an identifier") != std::string::npos);
  CHECK(Cli({"parse", "/nonexistent.yul"}).code == 2);
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"frobnicate"}).code == 2);
}

TEST_CASE("check") {
  CHECK(Cli({"check", F("examples/scoping.yul")}).code == 0);
  Run r = Cli({"check", Temp("c.yul", "{ leave }")});
  CHECK(r.code == 1);
  CHECK(r.out.find("mode-violation") != std::string::npos);
  CHECK(Cli({"check", "--var", "x=0", Temp("d.yul", "{ x := 1 }")}).code == 0);
  CHECK(Cli({"check", "--dialect", "none", Temp("e.yul", "{ let x := add(1, 2) }")}).code == 1);
  CHECK(Cli({"check", F("solc/nested.json")}).code == 0);
}

TEST_CASE("run") {
  Run r = Cli({"run", "--fuel", "100", F("examples/scoping.yul")});
  CHECK(r.code == 0);
  CHECK(r.out == "x=0\nmode=regular\n");
  r = Cli({"run", "--fuel", "0", F("examples/scoping.yul")});
  CHECK(r.code == 1);
  CHECK(r.out == "error=limit\n");
  r = Cli({"run", Temp("f.yul", "{ break }")});
  CHECK(r.code == 2);
  CHECK(r.out == "error=safety:mode-violation\n");
  r = Cli({"run", "--var", "b=0x10", "--var", "a=2", Temp("g.yul", "{ let c := add(a, b) }")});
  CHECK(r.code == 0);
  CHECK(r.out == "a=2\nb=16\nc=18\nmode=regular\n");
  CHECK(Cli({"run", "--var", "a", Temp("g.yul", "{ }")}).code == 2);
  r = Cli({"run", "--string-left-align-32", Temp("h.yul", "{ let s := shr(248, \"a\") }")});
  CHECK(r.out == "s=97\nmode=regular\n");
}

TEST_CASE("transform and import") {
  Run r = Cli({"transform", "--pass", "loop-init-rewrite", F("examples/loop_init_before.yul")});
  CHECK(r.code == 0);
  CHECK(test::P(r.out) == test::FixtureBlock("examples/loop_init_after.yul"));
  r = Cli({"transform", "--pass", "dead-code", F("examples/dead_code_before.yul")});
  CHECK(test::P(r.out) == test::FixtureBlock("examples/dead_code_after.yul"));
  CHECK(Cli({"transform", "--pass", "inline", F("examples/dead_code_before.yul")}).code == 2);
  r = Cli({"import-json", F("solc/statements.json")});
  CHECK(r.code == 0);
  CHECK(test::P(r.out) == test::FixtureBlock("solc/statements.yul"));
  CHECK(Cli({"import-json", Temp("i.json", "{}")}).code == 2);
}

TEST_CASE("validate") {
  Run r = Cli({"validate", "--transform", "disambiguate", F("examples/scoping.yul"), F("examples/disambiguated.yul")});
  CHECK(r.code == 0);
  auto cert = nlohmann::json::parse(r.out);
  CHECK(cert["schema"] == "yulkit-certificate/1");
  CHECK(cert["result"] == "accepted");
  CHECK(cert["inputs"]["old"]["sha256"] == cli::Sha256Hex(test::ReadText(F("examples/scoping.yul"))));
  CHECK_FALSE(cert["detail"].contains("error"));
  CHECK(cert["note"].get<std::string>().find("not a proof") != std::string::npos);

  r = Cli({"validate", "--transform", "disambiguate", F("examples/disambiguated.yul"), F("examples/scoping.yul")});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["result"] == "rejected");

  r = Cli({"validate", "--transform", "dead-code", "--differential", "25", F("examples/dead_code_before.yul"),
           F("examples/dead_code_after.yul")});
  CHECK(r.code == 0);
  cert = nlohmann::json::parse(r.out);
  CHECK(cert["differential"]["runs"] == 25);
  CHECK(cert["differential"]["mismatches"] == 0);

  r = Cli({"validate", "--transform", "dead-code", "--differential", "25", F("examples/dead_code_after.yul"),
           F("examples/dead_code_before.yul")});
  CHECK(r.code == 1);

  // Mixed inputs: solc JSON on one side, Yul text on the other.
  r = Cli({"validate", "--transform", "disambiguate", "--differential", "5", F("solc/scoping.json"),
           F("examples/disambiguated.yul")});
  CHECK(r.code == 0);
  cert = nlohmann::json::parse(r.out);
  CHECK(cert["inputs"]["old"]["format"] == "solc-json");
  CHECK(cert["inputs"]["new"]["format"] == "yul");

  CHECK(Cli({"validate", "--transform", "disambiguate", F("examples/scoping.yul"), Temp("j.yul", "{")}).code == 2);

  // Same inputs give the same certificate.
  CHECK(Cli({"validate", "--transform", "loop-init-rewrite", F("examples/loop_init_before.yul"),
             F("examples/loop_init_after.yul")})
            .out == Cli({"validate", "--transform", "loop-init-rewrite", F("examples/loop_init_before.yul"),
                         F("examples/loop_init_after.yul")})
                        .out);
}

TEST_CASE("validate-rename") {
  Run r = Cli({"validate-rename", F("examples/scoping.yul"), F("examples/disambiguated.yul")});
  CHECK(r.code == 0);
  auto cert = nlohmann::json::parse(r.out);
  CHECK(cert["detail"]["functions"].size() == 4);
  r = Cli({"validate-rename", F("examples/scoping.yul"), F("examples/scoping.yul")});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["detail"]["error"] == "not-unique");
}

TEST_CASE("suite") {
  Run r = Cli({"suite", "roundtrip", "--n", "10", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("10 cases, 0 failures") != std::string::npos);
  r = Cli({"suite", "static-soundness", "--n", "100", "--mutate-skip-output-zeroing"});
  CHECK(r.code == 1);
  CHECK(r.out.find("--replay") != std::string::npos);
  r = Cli({"suite", "fuel-monotonicity", "--n", "3", "--fuel", "8", "--fuel", "4096", "--serial"});
  CHECK(r.code == 0);
  r = Cli({"suite", "generator", "--replay", "17"});
  CHECK(r.code == 0);
  CHECK(r.out.find("program:") != std::string::npos);
  CHECK(Cli({"suite", "nope"}).code == 2);
}

TEST_CASE("sha256") {
  CHECK(cli::Sha256Hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(cli::Sha256Hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace yul
