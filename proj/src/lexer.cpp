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

#include <cctype>
#include <optional>
#include <string>

#include "yul/syntax.hpp"

namespace yul {
namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool IsIdentPart(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}
bool IsHexDigit(char c) {
  return std::isxdigit(static_cast<unsigned char>(c)) != 0;
}
int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return c - 'A' + 10;
}

std::optional<Keyword> KeywordOf(std::string_view word) {
  static constexpr std::pair<std::string_view, Keyword> kTable[] = {
      {"let", Keyword::kLet},         {"function", Keyword::kFunction},
      {"if", Keyword::kIf},           {"switch", Keyword::kSwitch},
      {"case", Keyword::kCase},       {"default", Keyword::kDefault},
      {"for", Keyword::kFor},         {"break", Keyword::kBreak},
      {"continue", Keyword::kContinue}, {"leave", Keyword::kLeave},
      {"true", Keyword::kTrue},       {"false", Keyword::kFalse},
  };
  for (const auto& [text, kw] : kTable) {
    if (text == word) return kw;
  }
  return std::nullopt;
}

std::string Describe(char c) {
  if (std::isprint(static_cast<unsigned char>(c))) {
    return std::string("'") + c + "'";
  }
  static constexpr char kHex[] = "0123456789abcdef";
  auto u = static_cast<unsigned char>(c);
  return std::string("byte 0x") + kHex[u >> 4] + kHex[u & 0xf];
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Result<std::vector<Token>, ParseError> Run() {
    std::vector<Token> tokens;
    while (true) {
      if (auto err = SkipTrivia()) return Unexpected{*err};
      if (AtEnd()) break;
      SourcePos start = pos_;
      size_t begin = i_;
      auto tok = Next();
      if (!tok) return Unexpected{std::move(tok).error()};
      tok->pos = start;
      tok->lexeme = std::string(src_.substr(begin, i_ - begin));
      tokens.push_back(std::move(*tok));
    }
    return tokens;
  }

 private:
  bool AtEnd() const { return i_ >= src_.size(); }
  char Peek(size_t ahead = 0) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }
  void Advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  Unexpected<ParseError> Fail(std::string expected, std::string found) const {
    return Unexpected{ParseError{pos_, std::move(expected), std::move(found)}};
  }

  std::optional<ParseError> SkipTrivia() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else if (c == '/' && Peek(1) == '*') {
        SourcePos start = pos_;
        Advance();
        Advance();
        while (!(Peek() == '*' && Peek(1) == '/')) {
          if (AtEnd()) {
            return ParseError{start, "'*/' closing block comment",
                              "end of input"};
          }
          Advance();
        }
        Advance();
        Advance();
      } else {
        break;
      }
    }
    return std::nullopt;
  }

  Result<Token, ParseError> Next() {
    char c = Peek();
    if (IsIdentStart(c)) return Word();
    if (std::isdigit(static_cast<unsigned char>(c))) return Number();
    if (c == '"' || c == '\'') return QuotedString();
    auto sym = [&](Symbol s, int len) {
      for (int k = 0; k < len; ++k) Advance();
      return Token{s, {}, {}};
    };
    switch (c) {
      case '{':
        return sym(Symbol::kLBrace, 1);
      case '}':
        return sym(Symbol::kRBrace, 1);
      case '(':
        return sym(Symbol::kLParen, 1);
      case ')':
        return sym(Symbol::kRParen, 1);
      case ',':
        return sym(Symbol::kComma, 1);
      case '.':
        return sym(Symbol::kDot, 1);
      case '-':
        if (Peek(1) == '>') return sym(Symbol::kArrow, 2);
        Advance();
        return Fail("'->'", "'-'");
      case ':':
        if (Peek(1) == '=') return sym(Symbol::kAssign, 2);
        // A lone colon is the typed-name syntax of the superseded grammar.
        return Fail("':='", "':'");
      default:
        return Fail("a token", Describe(c));
    }
  }

  Result<Token, ParseError> Word() {
    size_t begin = i_;
    while (IsIdentPart(Peek())) Advance();
    std::string_view word = src_.substr(begin, i_ - begin);
    if (word == "hex" && (Peek() == '"' || Peek() == '\'')) return HexLiteral();
    if (auto kw = KeywordOf(word)) return Token{*kw, {}, {}};
    return Token{Identifier(std::string(word)), {}, {}};
  }

  Result<Token, ParseError> Number() {
    size_t begin = i_;
    if (Peek() == '0' && Peek(1) == 'x') {
      Advance();
      Advance();
      size_t digits = i_;
      while (IsHexDigit(Peek())) Advance();
      if (i_ == digits) return Fail("hex digits after '0x'", Describe(Peek()));
      if (IsIdentPart(Peek())) {
        return Fail("end of hex number", Describe(Peek()));
      }
      return Token{MakeHex(std::string(src_.substr(digits, i_ - digits))), {},
                   {}};
    }
    while (std::isdigit(static_cast<unsigned char>(Peek()))) Advance();
    std::string_view digits = src_.substr(begin, i_ - begin);
    if (IsIdentPart(Peek())) {
      return Fail("end of decimal number", Describe(Peek()));
    }
    if (digits.size() > 1 && digits.front() == '0') {
      return Unexpected{ParseError{pos_, "decimal number without leading zeros",
                                   std::string(digits)}};
    }
    return Token{MakeDecimal(std::string(digits)), {}, {}};
  }

  Result<Token, ParseError> QuotedString() {
    using K = StringElement::Kind;
    const char quote = Peek();
    SourcePos start = pos_;
    Advance();
    PlainString str;
    while (true) {
      if (AtEnd() || Peek() == '\n' || Peek() == '\r') {
        return Unexpected{
            ParseError{start, "closing quote of string literal",
                       AtEnd() ? "end of input" : "line break"}};
      }
      char c = Peek();
      if (c == quote) {
        Advance();
        break;
      }
      if (c != '\\') {
        // Quotes are always held as escape elements so that printing with
        // double quotes is lossless.
        if (c == '"') {
          str.elements.push_back(StringElement::Escape(K::kDoubleQuote));
        } else {
          str.elements.push_back(StringElement::Raw(static_cast<unsigned char>(c)));
        }
        Advance();
        continue;
      }
      Advance();
      char e = Peek();
      switch (e) {
        case '\\':
          str.elements.push_back(StringElement::Escape(K::kBackslash));
          break;
        case '"':
          str.elements.push_back(StringElement::Escape(K::kDoubleQuote));
          break;
        case '\'':
          str.elements.push_back(StringElement::Escape(K::kSingleQuote));
          break;
        case 'n':
          str.elements.push_back(StringElement::Escape(K::kNewline));
          break;
        case 'r':
          str.elements.push_back(StringElement::Escape(K::kCarriageReturn));
          break;
        case 't':
          str.elements.push_back(StringElement::Escape(K::kTab));
          break;
        case 'x': {
          if (!IsHexDigit(Peek(1)) || !IsHexDigit(Peek(2))) {
            return Fail("two hex digits after '\\x'", Describe(Peek(1)));
          }
          auto b = static_cast<unsigned char>(HexValue(Peek(1)) * 16 +
                                              HexValue(Peek(2)));
          str.elements.push_back(StringElement::Hex(b));
          Advance();
          Advance();
          break;
        }
        case 'u':
          return Fail("a supported escape", "unsupported escape '\\u'");
        default:
          return Fail("a supported escape", AtEnd() ? "end of input"
                                                    : Describe(e));
      }
      Advance();
    }
    return Token{Literal{std::move(str)}, {}, {}};
  }

  Result<Token, ParseError> HexLiteral() {
    const char quote = Peek();
    SourcePos start = pos_;
    Advance();
    size_t begin = i_;
    while (!AtEnd() && Peek() != quote) {
      if (!IsHexDigit(Peek())) {
        return Fail("hex digit in hex string", Describe(Peek()));
      }
      Advance();
    }
    if (AtEnd()) {
      return Unexpected{
          ParseError{start, "closing quote of hex string", "end of input"}};
    }
    std::string digits(src_.substr(begin, i_ - begin));
    if (digits.size() % 2 != 0) {
      return Unexpected{ParseError{start, "an even number of hex digits",
                                   std::to_string(digits.size()) + " digits"}};
    }
    Advance();
    return Token{Literal{HexString{std::move(digits)}}, {}, {}};
  }

  std::string_view src_;
  size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

std::string ParseError::ToString() const {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) +
         ": expected " + expected + ", found " + found;
}

Result<std::vector<Token>, ParseError> Lex(std::string_view source) {
  return Lexer(source).Run();
}

}  // namespace yul
