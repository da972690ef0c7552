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

// Abstract syntax of Yul.
//
// Trees are plain values: copyable, comparable with ==, and safe to share
// between threads once built. Literals keep their lexical form, so `0xff`
// and `255` are different trees; equality is always structural.

#ifndef YUL_AST_HPP_
#define YUL_AST_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace yul {

// A Yul identifier: `[A-Za-z_$][A-Za-z0-9_$]*`, not a keyword. Dots are not
// part of identifiers; dotted names are Paths.
struct Identifier {
  std::string name;

  Identifier() = default;
  explicit Identifier(std::string n) : name(std::move(n)) {}

  friend bool operator==(const Identifier&, const Identifier&) = default;
  friend auto operator<=>(const Identifier&, const Identifier&) = default;
};

bool IsKeyword(std::string_view text);
// True iff `text` matches the identifier charset and is not a keyword.
bool IsValidIdentifier(std::string_view text);

struct Path {
  std::vector<Identifier> parts;  // nonempty

  friend bool operator==(const Path&, const Path&) = default;
};

Path MakePath(std::string_view name);

struct BoolLiteral {
  bool value = false;
  friend bool operator==(const BoolLiteral&, const BoolLiteral&) = default;
};

// Decimal digits, no sign.
struct DecNumber {
  std::string digits;
  friend bool operator==(const DecNumber&, const DecNumber&) = default;
};

// Hex digits without the `0x` prefix, case as written.
struct HexNumber {
  std::string digits;
  friend bool operator==(const HexNumber&, const HexNumber&) = default;
};

// One element of a quoted string literal. `byte` is always the byte the
// element denotes; `kind` records how it was written.
struct StringElement {
  enum class Kind : std::uint8_t {
    kRaw,
    kBackslash,       // \\   .
    kDoubleQuote,     // \"
    kSingleQuote,     // \'
    kNewline,         // \n
    kCarriageReturn,  // \r
    kTab,             // \t
    kHexByte,         // \xNN
  };

  Kind kind = Kind::kRaw;
  unsigned char byte = 0;

  static StringElement Raw(unsigned char c) { return {Kind::kRaw, c}; }
  static StringElement Hex(unsigned char b) { return {Kind::kHexByte, b}; }
  static StringElement Escape(Kind kind);

  friend bool operator==(const StringElement&, const StringElement&) = default;
};

// A quoted string. Raw elements never hold `"`, `\`, CR or LF; those are
// always represented by escape elements.
struct PlainString {
  std::vector<StringElement> elements;
  friend bool operator==(const PlainString&, const PlainString&) = default;
};

// `hex"..."`: an even number of hex digits, case as written.
struct HexString {
  std::string digits;
  friend bool operator==(const HexString&, const HexString&) = default;
};

struct Literal {
  std::variant<BoolLiteral, DecNumber, HexNumber, PlainString, HexString> value;

  friend bool operator==(const Literal&, const Literal&) = default;
};

Literal MakeDecimal(std::string digits);
Literal MakeHex(std::string digits);
Literal MakeBool(bool value);
// Builds a PlainString from raw bytes using the canonical escape choice.
Literal MakeString(std::string_view bytes);

struct Expression;

struct FunCall {
  Identifier name;
  std::vector<Expression> args;

  bool operator==(const FunCall& other) const;
};

struct Expression {
  std::variant<Path, Literal, FunCall> node;

  bool operator==(const Expression& other) const { return node == other.node; }
};

inline bool FunCall::operator==(const FunCall& other) const {
  return name == other.name && args == other.args;
}

Expression PathExpr(std::string_view name);
Expression LiteralExpr(Literal lit);
Expression CallExpr(std::string_view name, std::vector<Expression> args);

struct Statement;

struct Block {
  std::vector<Statement> statements;

  bool operator==(const Block& other) const;
};

struct VariableSingle {
  Identifier name;
  std::optional<Expression> init;
  friend bool operator==(const VariableSingle&, const VariableSingle&) = default;
};

// Two or more names.
struct VariableMulti {
  std::vector<Identifier> names;
  std::optional<FunCall> init;
  friend bool operator==(const VariableMulti&, const VariableMulti&) = default;
};

struct AssignSingle {
  Path target;
  Expression value;
  friend bool operator==(const AssignSingle&, const AssignSingle&) = default;
};

// Two or more targets.
struct AssignMulti {
  std::vector<Path> targets;
  FunCall value;
  friend bool operator==(const AssignMulti&, const AssignMulti&) = default;
};

struct FunCallStatement {
  FunCall call;
  friend bool operator==(const FunCallStatement&,
                         const FunCallStatement&) = default;
};

struct If {
  Expression test;
  Block body;
  friend bool operator==(const If&, const If&) = default;
};

struct SwitchCase {
  Literal value;
  Block body;
  friend bool operator==(const SwitchCase&, const SwitchCase&) = default;
};

struct Switch {
  Expression target;
  std::vector<SwitchCase> cases;
  std::optional<Block> default_block;
  friend bool operator==(const Switch&, const Switch&) = default;
};

struct For {
  Block init;
  Expression test;
  Block update;
  Block body;
  friend bool operator==(const For&, const For&) = default;
};

struct Break {
  friend bool operator==(Break, Break) = default;
};
struct Continue {
  friend bool operator==(Continue, Continue) = default;
};
struct Leave {
  friend bool operator==(Leave, Leave) = default;
};

struct FunDef {
  Identifier name;
  std::vector<Identifier> inputs;
  std::vector<Identifier> outputs;
  Block body;
  friend bool operator==(const FunDef&, const FunDef&) = default;
};

struct Statement {
  std::variant<Block, VariableSingle, VariableMulti, AssignSingle, AssignMulti,
               FunCallStatement, If, Switch, For, Break, Continue, Leave,
               FunDef>
      node;

  bool operator==(const Statement& other) const { return node == other.node; }
};

inline bool Block::operator==(const Block& other) const {
  return statements == other.statements;
}

template <typename T>
bool Holds(const Statement& s) {
  return std::holds_alternative<T>(s.node);
}

template <typename T>
const T* As(const Statement& s) {
  return std::get_if<T>(&s.node);
}

// Canonical single-line concrete syntax, e.g. `{ let x x := 17 }`.
std::string Print(const Block& block);
std::string Print(const Statement& stmt);
std::string Print(const Expression& expr);
std::string Print(const Literal& lit);

// Multi-line rendering with four-space indentation. Parses to the same tree
// as Print.
std::string PrintPretty(const Block& block);

struct DeclaredNames {
  std::set<Identifier> variables;
  std::set<Identifier> functions;
};

// Every variable (including function parameters and results) and every
// function name declared anywhere in `block`, nested functions included.
DeclaredNames CollectDeclaredNames(const Block& block);

// Function definitions that are direct statements of `block`, in order.
std::vector<const FunDef*> HoistedFunDefs(const Block& block);

}  // namespace yul

#endif  // YUL_AST_HPP_
