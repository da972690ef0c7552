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

#include "yul/solc_json.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

namespace yul {
namespace {

using json = nlohmann::json;

// Thrown inside the converter and turned into a Result at the entry points.
struct ConvertFailure {
  ConvertError error;
};

class Converter {
 public:
  Block Top(const json& j) {
    if (j.is_object() && !j.contains("nodeType") && j.contains("sources")) {
      const json& sources = Field(j, "sources");
      if (!sources.is_object() || sources.size() != 1) {
        Fail("expected exactly one source, found " + std::to_string(sources.size()));
      }
      Scope s(*this, "sources");
      Scope k(*this, sources.begin().key());
      return Top(Field(sources.begin().value(), "ast"));
    }
    std::string type = NodeType(j);
    if (type == "YulObject") {
      Scope s(*this, "code");
      return Top(Field(j, "code"));
    }
    if (type == "YulCode") {
      Scope s(*this, "block");
      return ToBlock(Field(j, "block"));
    }
    if (type == "InlineAssembly") {
      Scope s(*this, "AST");
      return ToBlock(Field(j, "AST"));
    }
    return ToBlock(j);
  }

 private:
  // Pushes one path component for the duration of a conversion step.
  struct Scope {
    Scope(Converter& c, const std::string& key) : conv(c) { conv.path_.push_back(key); }
    Scope(Converter& c, std::size_t index) : Scope(c, std::to_string(index)) {}
    ~Scope() { conv.path_.pop_back(); }
    Converter& conv;
  };

  [[noreturn]] void Fail(std::string reason) const {
    std::string path;
    for (const std::string& p : path_) path += "/" + p;
    if (path.empty()) path = "/";
    throw ConvertFailure{ConvertError{"", std::move(path), std::move(reason)}};
  }

  const json& Field(const json& j, const char* key) {
    if (!j.is_object()) Fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) Fail(std::string("missing field '") + key + "'");
    return *it;
  }

  std::string String(const json& j, const char* key) {
    const json& v = Field(j, key);
    if (!v.is_string()) {
      Scope s(*this, key);
      Fail("expected a string");
    }
    return v.get<std::string>();
  }

  // Array field; a missing key means empty.
  const json& OptionalArray(const json& j, const char* key) {
    static const json kEmpty = json::array();
    if (!j.is_object()) Fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) return kEmpty;
    if (!it->is_array()) {
      Scope s(*this, key);
      Fail("expected an array");
    }
    return *it;
  }

  std::string NodeType(const json& j) {
    if (!j.is_object()) Fail("expected an object");
    if (!j.contains("nodeType")) Fail("missing field 'nodeType'");
    return String(j, "nodeType");
  }

  void ExpectNode(const json& j, std::string_view type) {
    std::string actual = NodeType(j);
    if (actual != type) Fail("expected " + std::string(type) + ", found " + actual);
  }

  Identifier Ident(const std::string& name) {
    if (!IsValidIdentifier(name)) Fail("invalid identifier '" + name + "'");
    return Identifier(name);
  }

  // Declared names: a YulTypedName with an empty type.
  Identifier TypedName(const json& j) {
    ExpectNode(j, "YulTypedName");
    if (j.contains("type")) {
      const json& t = j["type"];
      if (!t.is_string() || !t.get<std::string>().empty()) {
        Scope s(*this, "type");
        Fail("typed names are not supported");
      }
    }
    Scope s(*this, "name");
    return Ident(String(j, "name"));
  }

  std::vector<Identifier> TypedNames(const json& j, const char* key) {
    const json& arr = OptionalArray(j, key);
    Scope s(*this, key);
    std::vector<Identifier> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Scope e(*this, i);
      out.push_back(TypedName(arr[i]));
    }
    return out;
  }

  Path IdentPath(const json& j) {
    ExpectNode(j, "YulIdentifier");
    std::string name = String(j, "name");
    Scope s(*this, "name");
    Path path;
    std::size_t start = 0;
    while (true) {
      std::size_t dot = name.find('.', start);
      path.parts.push_back(Ident(name.substr(start, dot - start)));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    return path;
  }

  Block ToBlock(const json& j) {
    ExpectNode(j, "YulBlock");
    const json& stmts = OptionalArray(j, "statements");
    Scope s(*this, "statements");
    Block block;
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      Scope e(*this, i);
      block.statements.push_back(ToStatement(stmts[i]));
    }
    return block;
  }

  Block SubBlock(const json& j, const char* key) {
    Scope s(*this, key);
    return ToBlock(Field(j, key));
  }

  Expression SubExpr(const json& j, const char* key) {
    const json& e = Field(j, key);
    Scope s(*this, key);
    return ToExpression(e);
  }

  FunCall SubCall(const json& j, const char* key) {
    const json& e = Field(j, key);
    Scope s(*this, key);
    ExpectNode(e, "YulFunctionCall");
    return ToCall(e);
  }

  Statement ToStatement(const json& j) {
    std::string type = NodeType(j);
    if (type == "YulBlock") return Statement{ToBlock(j)};
    if (type == "YulVariableDeclaration") {
      std::vector<Identifier> names = TypedNames(j, "variables");
      bool has_value = j.contains("value") && !j["value"].is_null();
      if (names.empty()) Fail("declaration without variables");
      if (names.size() == 1) {
        std::optional<Expression> init;
        if (has_value) init = SubExpr(j, "value");
        return Statement{VariableSingle{std::move(names.front()), std::move(init)}};
      }
      std::optional<FunCall> init;
      if (has_value) init = SubCall(j, "value");
      return Statement{VariableMulti{std::move(names), std::move(init)}};
    }
    if (type == "YulAssignment") {
      const json& targets = Field(j, "variableNames");
      if (!targets.is_array() || targets.empty()) Fail("assignment without targets");
      std::vector<Path> paths;
      {
        Scope s(*this, "variableNames");
        for (std::size_t i = 0; i < targets.size(); ++i) {
          Scope e(*this, i);
          paths.push_back(IdentPath(targets[i]));
        }
      }
      if (paths.size() == 1) {
        return Statement{AssignSingle{std::move(paths.front()), SubExpr(j, "value")}};
      }
      return Statement{AssignMulti{std::move(paths), SubCall(j, "value")}};
    }
    if (type == "YulExpressionStatement") {
      return Statement{FunCallStatement{SubCall(j, "expression")}};
    }
    if (type == "YulFunctionDefinition") {
      FunDef def;
      {
        Scope s(*this, "name");
        def.name = Ident(String(j, "name"));
      }
      def.inputs = TypedNames(j, "parameters");
      def.outputs = TypedNames(j, "returnVariables");
      def.body = SubBlock(j, "body");
      return Statement{std::move(def)};
    }
    if (type == "YulIf") {
      Expression test = SubExpr(j, "condition");
      return Statement{If{std::move(test), SubBlock(j, "body")}};
    }
    if (type == "YulSwitch") return ToSwitch(j);
    if (type == "YulForLoop") {
      Block init = SubBlock(j, "pre");
      Expression test = SubExpr(j, "condition");
      Block update = SubBlock(j, "post");
      Block body = SubBlock(j, "body");
      return Statement{For{std::move(init), std::move(test), std::move(update), std::move(body)}};
    }
    if (type == "YulBreak") return Statement{Break{}};
    if (type == "YulContinue") return Statement{Continue{}};
    if (type == "YulLeave") return Statement{Leave{}};
    Fail("unknown statement nodeType '" + type + "'");
  }

  Statement ToSwitch(const json& j) {
    Switch sw{SubExpr(j, "expression"), {}, std::nullopt};
    const json& cases = OptionalArray(j, "cases");
    Scope s(*this, "cases");
    for (std::size_t i = 0; i < cases.size(); ++i) {
      Scope e(*this, i);
      const json& c = cases[i];
      ExpectNode(c, "YulCase");
      const json& value = Field(c, "value");
      if (value.is_string() && value.get<std::string>() == "default") {
        if (sw.default_block) Fail("second default case");
        sw.default_block = SubBlock(c, "body");
        continue;
      }
      Literal lit;
      {
        Scope v(*this, "value");
        lit = ToLiteral(value);
      }
      sw.cases.push_back(SwitchCase{std::move(lit), SubBlock(c, "body")});
    }
    if (sw.cases.empty() && !sw.default_block) Fail("switch without cases");
    return Statement{std::move(sw)};
  }

  FunCall ToCall(const json& j) {
    FunCall call;
    {
      const json& fn = Field(j, "functionName");
      Scope s(*this, "functionName");
      Path p = IdentPath(fn);
      if (p.parts.size() != 1) Fail("dotted function name");
      call.name = std::move(p.parts.front());
    }
    const json& args = OptionalArray(j, "arguments");
    Scope s(*this, "arguments");
    for (std::size_t i = 0; i < args.size(); ++i) {
      Scope e(*this, i);
      call.args.push_back(ToExpression(args[i]));
    }
    return call;
  }

  Expression ToExpression(const json& j) {
    std::string type = NodeType(j);
    if (type == "YulFunctionCall") return Expression{ToCall(j)};
    if (type == "YulIdentifier") return Expression{IdentPath(j)};
    if (type == "YulLiteral") return Expression{ToLiteral(j)};
    Fail("unknown expression nodeType '" + type + "'");
  }

  static bool AllOf(const std::string& s, int (*pred)(int)) {
    for (unsigned char c : s) {
      if (!pred(c)) return false;
    }
    return !s.empty();
  }

  Literal ToLiteral(const json& j) {
    ExpectNode(j, "YulLiteral");
    if (j.contains("type")) {
      const json& t = j["type"];
      if (!t.is_string() || !t.get<std::string>().empty()) {
        Scope s(*this, "type");
        Fail("typed literals are not supported");
      }
    }
    std::string kind = String(j, "kind");
    if (kind == "bool") {
      std::string v = String(j, "value");
      if (v == "true") return MakeBool(true);
      if (v == "false") return MakeBool(false);
      Scope s(*this, "value");
      Fail("bad boolean '" + v + "'");
    }
    if (kind == "number") {
      std::string v = String(j, "value");
      Scope s(*this, "value");
      if (v.size() > 2 && v[0] == '0' && v[1] == 'x') {
        std::string digits = v.substr(2);
        if (!AllOf(digits, [](int c) { return std::isxdigit(c); })) Fail("bad hex number '" + v + "'");
        return MakeHex(std::move(digits));
      }
      if (!AllOf(v, [](int c) { return std::isdigit(c); })) Fail("bad number '" + v + "'");
      return MakeDecimal(std::move(v));
    }
    if (kind == "string") {
      // solc omits the decoded value for hex strings (and for strings that
      // are not valid UTF-8, which therefore come back as hex strings).
      if (j.contains("value")) return MakeString(String(j, "value"));
      std::string hex = String(j, "hexValue");
      Scope s(*this, "hexValue");
      if (hex.size() % 2 != 0 ||
          (!hex.empty() && !AllOf(hex, [](int c) { return std::isxdigit(c); }))) {
        Fail("bad hex value '" + hex + "'");
      }
      return Literal{HexString{std::move(hex)}};
    }
    Scope s(*this, "kind");
    Fail("unknown literal kind '" + kind + "'");
  }

  std::vector<std::string> path_;
};

}  // namespace

std::string ConvertError::ToString() const {
  return (input.empty() ? "" : input + ": ") + path + ": " + reason;
}

Result<Block, ConvertError> ConvertSolcJson(const nlohmann::json& j) {
  try {
    return Converter().Top(j);
  } catch (ConvertFailure& f) {
    return Unexpected{std::move(f.error)};
  }
}

Result<Block, ConvertError> ConvertSolcJsonText(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return Unexpected{ConvertError{"", "/", "malformed JSON"}};
  return ConvertSolcJson(j);
}

Result<std::pair<Block, Block>, ConvertError> ConvertSolcJsonPair(
    std::string_view old_text, std::string_view new_text) {
  auto a = ConvertSolcJsonText(old_text);
  if (!a) {
    ConvertError e = std::move(a).error();
    e.input = "old";
    return Unexpected{std::move(e)};
  }
  auto b = ConvertSolcJsonText(new_text);
  if (!b) {
    ConvertError e = std::move(b).error();
    e.input = "new";
    return Unexpected{std::move(e)};
  }
  return std::pair<Block, Block>{std::move(*a), std::move(*b)};
}

}  // namespace yul
