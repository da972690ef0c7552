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

#ifndef YULKIT_TESTS_TEST_UTIL_HPP_
#define YULKIT_TESTS_TEST_UTIL_HPP_

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "yul/ast.hpp"
#include "yul/syntax.hpp"

namespace yul::test {

inline Block P(const std::string& text) {
  auto b = ParseProgram(text);
  if (!b) throw std::runtime_error("parse failed: " + b.error().ToString() + " in " + text);
  return *b;
}

// First statement of a one-statement program.
inline Statement S(const std::string& text) { return P("{ " + text + " }").statements.at(0); }

inline Expression E(const std::string& text) {
  auto tokens = Lex(text);
  if (!tokens) throw std::runtime_error(tokens.error().ToString());
  auto e = ParseExpression(*tokens);
  if (!e) throw std::runtime_error(e.error().ToString());
  return *e;
}

inline std::string Fixture(const std::string& rel) { return std::string(YULKIT_FIXTURES_DIR) + "/" + rel; }

inline std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Block FixtureBlock(const std::string& rel) { return P(ReadText(Fixture(rel))); }

}  // namespace yul::test

#endif  // YULKIT_TESTS_TEST_UTIL_HPP_
