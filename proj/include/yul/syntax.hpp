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

// Lexer and recursive-descent parser for the untyped Yul grammar. See
// docs/grammar.abnf for the grammar this follows.

#ifndef YUL_SYNTAX_HPP_
#define YUL_SYNTAX_HPP_

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "yul/ast.hpp"
#include "yul/result.hpp"

namespace yul {

enum class Keyword {
  kLet,
  kFunction,
  kIf,
  kSwitch,
  kCase,
  kDefault,
  kFor,
  kBreak,
  kContinue,
  kLeave,
  kTrue,
  kFalse,
};

enum class Symbol {
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kComma,
  kArrow,   // ->
  kAssign,  // :=
  kDot,
};

struct SourcePos {
  int line = 1;
  int column = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct Token {
  std::variant<Keyword, Identifier, Literal, Symbol> value;
  std::string lexeme;
  SourcePos pos;

  // Tokens compare by kind and payload; positions are ignored.
  bool operator==(const Token& other) const { return value == other.value; }
};

struct ParseError {
  SourcePos pos;
  std::string expected;
  std::string found;

  std::string ToString() const;
};

// Maximum nesting of blocks and call arguments accepted by the parser.
inline constexpr int kMaxNestingDepth = 1024;

Result<std::vector<Token>, ParseError> Lex(std::string_view source);

// Each parser consumes the whole token sequence.
Result<Block, ParseError> ParseBlock(std::span<const Token> tokens);
Result<Statement, ParseError> ParseStatement(std::span<const Token> tokens);
Result<Expression, ParseError> ParseExpression(std::span<const Token> tokens);

// A Yul unit is a single top-level block.
Result<Block, ParseError> ParseProgram(std::string_view source);

}  // namespace yul

#endif  // YUL_SYNTAX_HPP_
