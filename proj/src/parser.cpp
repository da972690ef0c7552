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

#include <string>
#include <utility>

#include "yul/syntax.hpp"
#include "yul/visit.hpp"

namespace yul {
namespace {

std::string_view KeywordText(Keyword kw) {
  switch (kw) {
    case Keyword::kLet: return "let";
    case Keyword::kFunction: return "function";
    case Keyword::kIf: return "if";
    case Keyword::kSwitch: return "switch";
    case Keyword::kCase: return "case";
    case Keyword::kDefault: return "default";
    case Keyword::kFor: return "for";
    case Keyword::kBreak: return "break";
    case Keyword::kContinue: return "continue";
    case Keyword::kLeave: return "leave";
    case Keyword::kTrue: return "true";
    case Keyword::kFalse: return "false";
  }
  return "?";
}

std::string_view SymbolText(Symbol s) {
  switch (s) {
    case Symbol::kLBrace: return "'{'";
    case Symbol::kRBrace: return "'}'";
    case Symbol::kLParen: return "'('";
    case Symbol::kRParen: return "')'";
    case Symbol::kComma: return "','";
    case Symbol::kArrow: return "'->'";
    case Symbol::kAssign: return "':='";
    case Symbol::kDot: return "'.'";
  }
  return "?";
}

// Thrown internally and converted to a Result at the public entry points.
struct ParseFailure {
  ParseError error;
};

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

  Block ParseBlockNode() {
    DepthGuard guard(*this);
    Expect(Symbol::kLBrace, "'{'");
    Block block;
    while (!IsSymbol(Symbol::kRBrace)) {
      if (AtEnd()) Fail("'}'");
      block.statements.push_back(ParseStatementNode());
    }
    ++i_;
    return block;
  }

  Statement ParseStatementNode() {
    if (IsSymbol(Symbol::kLBrace)) return Statement{ParseBlockNode()};
    if (const Keyword* kw = PeekKeyword()) {
      switch (*kw) {
        case Keyword::kLet: return ParseLet();
        case Keyword::kFunction: return ParseFunDef();
        case Keyword::kIf: {
          ++i_;
          Expression test = ParseExpressionNode();
          return Statement{If{std::move(test), ParseBlockNode()}};
        }
        case Keyword::kSwitch: return ParseSwitch();
        case Keyword::kFor: {
          ++i_;
          Block init = ParseBlockNode();
          Expression test = ParseExpressionNode();
          Block update = ParseBlockNode();
          Block body = ParseBlockNode();
          return Statement{For{std::move(init), std::move(test),
                               std::move(update), std::move(body)}};
        }
        case Keyword::kBreak: ++i_; return Statement{Break{}};
        case Keyword::kContinue: ++i_; return Statement{Continue{}};
        case Keyword::kLeave: ++i_; return Statement{Leave{}};
        default: break;
      }
      Fail("a statement");
    }
    if (PeekIdentifier()) return ParseCallOrAssignment();
    Fail("a statement");
  }

  Expression ParseExpressionNode() {
    DepthGuard guard(*this);
    if (const Literal* lit = PeekLiteral()) {
      ++i_;
      return Expression{*lit};
    }
    if (const Keyword* kw = PeekKeyword()) {
      if (*kw == Keyword::kTrue || *kw == Keyword::kFalse) {
        ++i_;
        return Expression{MakeBool(*kw == Keyword::kTrue)};
      }
      Fail("an expression");
    }
    if (!PeekIdentifier()) Fail("an expression");
    Path path = ParsePath();
    if (IsSymbol(Symbol::kLParen)) {
      if (path.parts.size() != 1) Fail("a function name without dots");
      return Expression{ParseCallArgs(std::move(path.parts.front()))};
    }
    return Expression{std::move(path)};
  }

  bool AtEnd() const { return i_ >= toks_.size(); }

  void ExpectEnd() {
    if (!AtEnd()) Fail("end of input");
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNestingDepth) {
        parser.Fail("nesting depth at most " + std::to_string(kMaxNestingDepth));
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  [[noreturn]] void Fail(std::string expected) const {
    ParseError err;
    err.expected = std::move(expected);
    if (AtEnd()) {
      err.found = "end of input";
      if (!toks_.empty()) {
        err.pos = toks_.back().pos;
        err.pos.column += static_cast<int>(toks_.back().lexeme.size());
      }
    } else {
      err.found = Describe(toks_[i_]);
      err.pos = toks_[i_].pos;
    }
    throw ParseFailure{std::move(err)};
  }

  static std::string Describe(const Token& t) {
    return Visit(
        t.value,
        [](Keyword k) { return "keyword '" + std::string(KeywordText(k)) + "'"; },
        [](const Identifier& id) { return "identifier '" + id.name + "'"; },
        [&](const Literal&) { return "literal " + t.lexeme; },
        [](Symbol s) { return std::string(SymbolText(s)); });
  }

  bool IsSymbol(Symbol s) const {
    if (AtEnd()) return false;
    const auto* sym = std::get_if<Symbol>(&toks_[i_].value);
    return sym != nullptr && *sym == s;
  }
  const Keyword* PeekKeyword() const {
    return AtEnd() ? nullptr : std::get_if<Keyword>(&toks_[i_].value);
  }
  const Identifier* PeekIdentifier() const {
    return AtEnd() ? nullptr : std::get_if<Identifier>(&toks_[i_].value);
  }
  const Literal* PeekLiteral() const {
    return AtEnd() ? nullptr : std::get_if<Literal>(&toks_[i_].value);
  }

  void Expect(Symbol s, std::string_view what) {
    if (!IsSymbol(s)) Fail(std::string(what));
    ++i_;
  }

  Identifier ExpectIdentifier() {
    const Identifier* id = PeekIdentifier();
    if (id == nullptr) Fail("an identifier");
    ++i_;
    return *id;
  }

  Path ParsePath() {
    Path path;
    path.parts.push_back(ExpectIdentifier());
    while (IsSymbol(Symbol::kDot)) {
      ++i_;
      path.parts.push_back(ExpectIdentifier());
    }
    return path;
  }

  FunCall ParseCallArgs(Identifier name) {
    Expect(Symbol::kLParen, "'('");
    FunCall call{std::move(name), {}};
    if (!IsSymbol(Symbol::kRParen)) {
      call.args.push_back(ParseExpressionNode());
      while (IsSymbol(Symbol::kComma)) {
        ++i_;
        call.args.push_back(ParseExpressionNode());
      }
    }
    Expect(Symbol::kRParen, "',' or ')'");
    return call;
  }

  // Used where the grammar demands a function call (multi-value contexts).
  FunCall ParseCallOnly() {
    size_t start = i_;
    Expression e = ParseExpressionNode();
    if (auto* call = std::get_if<FunCall>(&e.node)) return std::move(*call);
    i_ = start;
    Fail("a function call");
  }

  Statement ParseLet() {
    ++i_;
    std::vector<Identifier> names;
    names.push_back(ExpectIdentifier());
    while (IsSymbol(Symbol::kComma)) {
      ++i_;
      names.push_back(ExpectIdentifier());
    }
    bool has_init = IsSymbol(Symbol::kAssign);
    if (has_init) ++i_;
    if (names.size() == 1) {
      VariableSingle v{std::move(names.front()), std::nullopt};
      if (has_init) v.init = ParseExpressionNode();
      return Statement{std::move(v)};
    }
    VariableMulti v{std::move(names), std::nullopt};
    if (has_init) v.init = ParseCallOnly();
    return Statement{std::move(v)};
  }

  Statement ParseFunDef() {
    ++i_;
    FunDef def;
    def.name = ExpectIdentifier();
    Expect(Symbol::kLParen, "'('");
    if (!IsSymbol(Symbol::kRParen)) {
      def.inputs.push_back(ExpectIdentifier());
      while (IsSymbol(Symbol::kComma)) {
        ++i_;
        def.inputs.push_back(ExpectIdentifier());
      }
    }
    Expect(Symbol::kRParen, "',' or ')'");
    if (IsSymbol(Symbol::kArrow)) {
      ++i_;
      def.outputs.push_back(ExpectIdentifier());
      while (IsSymbol(Symbol::kComma)) {
        ++i_;
        def.outputs.push_back(ExpectIdentifier());
      }
    }
    def.body = ParseBlockNode();
    return Statement{std::move(def)};
  }

  Statement ParseSwitch() {
    ++i_;
    Switch sw{ParseExpressionNode(), {}, std::nullopt};
    while (const Keyword* kw = PeekKeyword()) {
      if (*kw != Keyword::kCase) break;
      ++i_;
      Literal value;
      if (const Literal* lit = PeekLiteral()) {
        value = *lit;
      } else if (const Keyword* b = PeekKeyword();
                 b != nullptr && (*b == Keyword::kTrue || *b == Keyword::kFalse)) {
        value = MakeBool(*b == Keyword::kTrue);
      } else {
        Fail("a literal after 'case'");
      }
      ++i_;
      Block body = ParseBlockNode();
      sw.cases.push_back(SwitchCase{std::move(value), std::move(body)});
    }
    if (const Keyword* kw = PeekKeyword(); kw != nullptr && *kw == Keyword::kDefault) {
      ++i_;
      sw.default_block = ParseBlockNode();
    }
    if (sw.cases.empty() && !sw.default_block) Fail("'case' or 'default'");
    return Statement{std::move(sw)};
  }

  Statement ParseCallOrAssignment() {
    Path first = ParsePath();
    if (IsSymbol(Symbol::kLParen)) {
      if (first.parts.size() != 1) Fail("a function name without dots");
      return Statement{FunCallStatement{ParseCallArgs(std::move(first.parts.front()))}};
    }
    std::vector<Path> targets;
    targets.push_back(std::move(first));
    while (IsSymbol(Symbol::kComma)) {
      ++i_;
      targets.push_back(ParsePath());
    }
    if (!IsSymbol(Symbol::kAssign)) {
      Fail(targets.size() == 1 ? "':=' or '('" : "':='");
    }
    ++i_;
    if (targets.size() == 1) {
      return Statement{AssignSingle{std::move(targets.front()), ParseExpressionNode()}};
    }
    return Statement{AssignMulti{std::move(targets), ParseCallOnly()}};
  }

  std::span<const Token> toks_;
  size_t i_ = 0;
  int depth_ = 0;
};

template <typename T, typename F>
Result<T, ParseError> RunParser(std::span<const Token> tokens, F&& f) {
  try {
    Parser p(tokens);
    T node = f(p);
    p.ExpectEnd();
    return node;
  } catch (ParseFailure& failure) {
    return Unexpected{std::move(failure.error)};
  }
}

}  // namespace

Result<Block, ParseError> ParseBlock(std::span<const Token> tokens) {
  return RunParser<Block>(tokens, [](Parser& p) { return p.ParseBlockNode(); });
}

Result<Statement, ParseError> ParseStatement(std::span<const Token> tokens) {
  return RunParser<Statement>(tokens,
                              [](Parser& p) { return p.ParseStatementNode(); });
}

Result<Expression, ParseError> ParseExpression(std::span<const Token> tokens) {
  return RunParser<Expression>(tokens,
                               [](Parser& p) { return p.ParseExpressionNode(); });
}

Result<Block, ParseError> ParseProgram(std::string_view source) {
  YUL_ASSIGN_OR_RETURN(std::vector<Token> tokens, Lex(source));
  return ParseBlock(tokens);
}

}  // namespace yul
