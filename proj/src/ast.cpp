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

#include "yul/ast.hpp"

#include <array>
#include <string>

#include "yul/visit.hpp"

namespace yul {
namespace {

constexpr std::array<std::string_view, 12> kKeywords = {
    "let",   "function", "if",    "switch", "case", "default",
    "for",   "break",    "continue", "leave", "true", "false"};

bool IsIdentStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$';
}

bool IsIdentPart(char c) { return IsIdentStart(c) || (c >= '0' && c <= '9'); }

constexpr char kHexDigits[] = "0123456789abcdef";

void AppendElement(std::string& out, const StringElement& e) {
  using K = StringElement::Kind;
  switch (e.kind) {
    case K::kRaw:
      out.push_back(static_cast<char>(e.byte));
      return;
    case K::kBackslash:
      out += "\\\\";
      return;
    case K::kDoubleQuote:
      out += "\\\"";
      return;
    case K::kSingleQuote:
      out += "\\'";
      return;
    case K::kNewline:
      out += "\\n";
      return;
    case K::kCarriageReturn:
      out += "\\r";
      return;
    case K::kTab:
      out += "\\t";
      return;
    case K::kHexByte:
      out += "\\x";
      out.push_back(kHexDigits[e.byte >> 4]);
      out.push_back(kHexDigits[e.byte & 0xf]);
      return;
  }
}

class Printer {
 public:
  explicit Printer(bool pretty) : pretty_(pretty) {}

  std::string Take() { return std::move(out_); }

  void Lit(const Literal& lit) {
    Visit(lit.value,
          [&](const BoolLiteral& b) { out_ += b.value ? "true" : "false"; },
          [&](const DecNumber& d) { out_ += d.digits; },
          [&](const HexNumber& h) { out_ += "0x" + h.digits; },
          [&](const PlainString& s) {
            out_.push_back('"');
            for (const StringElement& e : s.elements) AppendElement(out_, e);
            out_.push_back('"');
          },
          [&](const HexString& h) { out_ += "hex\"" + h.digits + "\""; });
  }

  void PathOut(const Path& p) {
    for (size_t i = 0; i < p.parts.size(); ++i) {
      if (i > 0) out_.push_back('.');
      out_ += p.parts[i].name;
    }
  }

  void Call(const FunCall& call) {
    out_ += call.name.name;
    out_.push_back('(');
    for (size_t i = 0; i < call.args.size(); ++i) {
      if (i > 0) out_ += ", ";
      Expr(call.args[i]);
    }
    out_.push_back(')');
  }

  void Expr(const Expression& e) {
    Visit(e.node, [&](const Path& p) { PathOut(p); },
          [&](const Literal& l) { Lit(l); },
          [&](const FunCall& c) { Call(c); });
  }

  void Names(const std::vector<Identifier>& names) {
    for (size_t i = 0; i < names.size(); ++i) {
      if (i > 0) out_ += ", ";
      out_ += names[i].name;
    }
  }

  // Blocks in for-loop headers stay on one line even in pretty mode.
  void BlockOut(const Block& b, bool inline_block = false) {
    if (b.statements.empty()) {
      out_ += "{ }";
      return;
    }
    if (!pretty_ || inline_block) {
      bool saved = pretty_;
      pretty_ = false;
      out_ += "{";
      for (const Statement& s : b.statements) {
        out_.push_back(' ');
        Stmt(s);
      }
      out_ += " }";
      pretty_ = saved;
      return;
    }
    out_ += "{\n";
    ++depth_;
    for (const Statement& s : b.statements) {
      Indent();
      Stmt(s);
      out_.push_back('\n');
    }
    --depth_;
    Indent();
    out_ += "}";
  }

  void Stmt(const Statement& s) {
    Visit(
        s.node, [&](const Block& b) { BlockOut(b); },
        [&](const VariableSingle& v) {
          out_ += "let " + v.name.name;
          if (v.init) {
            out_ += " := ";
            Expr(*v.init);
          }
        },
        [&](const VariableMulti& v) {
          out_ += "let ";
          Names(v.names);
          if (v.init) {
            out_ += " := ";
            Call(*v.init);
          }
        },
        [&](const AssignSingle& a) {
          PathOut(a.target);
          out_ += " := ";
          Expr(a.value);
        },
        [&](const AssignMulti& a) {
          for (size_t i = 0; i < a.targets.size(); ++i) {
            if (i > 0) out_ += ", ";
            PathOut(a.targets[i]);
          }
          out_ += " := ";
          Call(a.value);
        },
        [&](const FunCallStatement& c) { Call(c.call); },
        [&](const If& i) {
          out_ += "if ";
          Expr(i.test);
          out_.push_back(' ');
          BlockOut(i.body);
        },
        [&](const Switch& sw) {
          out_ += "switch ";
          Expr(sw.target);
          for (const SwitchCase& c : sw.cases) {
            out_ += " case ";
            Lit(c.value);
            out_.push_back(' ');
            BlockOut(c.body);
          }
          if (sw.default_block) {
            out_ += " default ";
            BlockOut(*sw.default_block);
          }
        },
        [&](const For& f) {
          out_ += "for ";
          BlockOut(f.init, true);
          out_.push_back(' ');
          Expr(f.test);
          out_.push_back(' ');
          BlockOut(f.update, true);
          out_.push_back(' ');
          BlockOut(f.body);
        },
        [&](const Break&) { out_ += "break"; },
        [&](const Continue&) { out_ += "continue"; },
        [&](const Leave&) { out_ += "leave"; },
        [&](const FunDef& f) {
          out_ += "function " + f.name.name + "(";
          Names(f.inputs);
          out_ += ")";
          if (!f.outputs.empty()) {
            out_ += " -> ";
            Names(f.outputs);
          }
          out_.push_back(' ');
          BlockOut(f.body);
        });
  }

 private:
  void Indent() { out_.append(static_cast<size_t>(depth_) * 4, ' '); }

  bool pretty_;
  int depth_ = 0;
  std::string out_;
};

void CollectInto(const Block& block, DeclaredNames& names);

void CollectInto(const Statement& s, DeclaredNames& names) {
  Visit(
      s.node, [&](const Block& b) { CollectInto(b, names); },
      [&](const VariableSingle& v) { names.variables.insert(v.name); },
      [&](const VariableMulti& v) {
        names.variables.insert(v.names.begin(), v.names.end());
      },
      [&](const If& i) { CollectInto(i.body, names); },
      [&](const Switch& sw) {
        for (const SwitchCase& c : sw.cases) CollectInto(c.body, names);
        if (sw.default_block) CollectInto(*sw.default_block, names);
      },
      [&](const For& f) {
        CollectInto(f.init, names);
        CollectInto(f.update, names);
        CollectInto(f.body, names);
      },
      [&](const FunDef& f) {
        names.functions.insert(f.name);
        names.variables.insert(f.inputs.begin(), f.inputs.end());
        names.variables.insert(f.outputs.begin(), f.outputs.end());
        CollectInto(f.body, names);
      },
      [](const auto&) {});
}

void CollectInto(const Block& block, DeclaredNames& names) {
  for (const Statement& s : block.statements) CollectInto(s, names);
}

}  // namespace

bool IsKeyword(std::string_view text) {
  for (std::string_view k : kKeywords) {
    if (k == text) return true;
  }
  return false;
}

bool IsValidIdentifier(std::string_view text) {
  if (text.empty() || !IsIdentStart(text.front())) return false;
  for (char c : text) {
    if (!IsIdentPart(c)) return false;
  }
  return !IsKeyword(text);
}

Path MakePath(std::string_view name) {
  Path p;
  size_t start = 0;
  while (true) {
    size_t dot = name.find('.', start);
    p.parts.emplace_back(std::string(name.substr(start, dot - start)));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return p;
}

StringElement StringElement::Escape(Kind kind) {
  switch (kind) {
    case Kind::kBackslash:
      return {kind, '\\'};
    case Kind::kDoubleQuote:
      return {kind, '"'};
    case Kind::kSingleQuote:
      return {kind, '\''};
    case Kind::kNewline:
      return {kind, '\n'};
    case Kind::kCarriageReturn:
      return {kind, '\r'};
    case Kind::kTab:
      return {kind, '\t'};
    case Kind::kRaw:
    case Kind::kHexByte:
      break;
  }
  return {Kind::kHexByte, 0};
}

Literal MakeDecimal(std::string digits) {
  return Literal{DecNumber{std::move(digits)}};
}
Literal MakeHex(std::string digits) { return Literal{HexNumber{std::move(digits)}}; }
Literal MakeBool(bool value) { return Literal{BoolLiteral{value}}; }

Literal MakeString(std::string_view bytes) {
  using K = StringElement::Kind;
  PlainString s;
  for (char ch : bytes) {
    auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '\\':
        s.elements.push_back(StringElement::Escape(K::kBackslash));
        break;
      case '"':
        s.elements.push_back(StringElement::Escape(K::kDoubleQuote));
        break;
      case '\n':
        s.elements.push_back(StringElement::Escape(K::kNewline));
        break;
      case '\r':
        s.elements.push_back(StringElement::Escape(K::kCarriageReturn));
        break;
      case '\t':
        s.elements.push_back(StringElement::Escape(K::kTab));
        break;
      default:
        if (c < 0x20 || c == 0x7f) {
          s.elements.push_back(StringElement::Hex(c));
        } else {
          s.elements.push_back(StringElement::Raw(c));
        }
    }
  }
  return Literal{std::move(s)};
}

Expression PathExpr(std::string_view name) { return Expression{MakePath(name)}; }
Expression LiteralExpr(Literal lit) { return Expression{std::move(lit)}; }
Expression CallExpr(std::string_view name, std::vector<Expression> args) {
  return Expression{FunCall{Identifier(std::string(name)), std::move(args)}};
}

std::string Print(const Block& block) {
  Printer p(false);
  p.BlockOut(block);
  return p.Take();
}

std::string Print(const Statement& stmt) {
  Printer p(false);
  p.Stmt(stmt);
  return p.Take();
}

std::string Print(const Expression& expr) {
  Printer p(false);
  p.Expr(expr);
  return p.Take();
}

std::string Print(const Literal& lit) {
  Printer p(false);
  p.Lit(lit);
  return p.Take();
}

std::string PrintPretty(const Block& block) {
  Printer p(true);
  p.BlockOut(block);
  std::string out = p.Take();
  out.push_back('\n');
  return out;
}

DeclaredNames CollectDeclaredNames(const Block& block) {
  DeclaredNames names;
  CollectInto(block, names);
  return names;
}

std::vector<const FunDef*> HoistedFunDefs(const Block& block) {
  std::vector<const FunDef*> defs;
  for (const Statement& s : block.statements) {
    if (const auto* f = As<FunDef>(s)) defs.push_back(f);
  }
  return defs;
}

}  // namespace yul
