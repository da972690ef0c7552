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

#include "yul/dialect.hpp"

#include <utility>

namespace yul {
namespace {

using Args = std::span<const Value>;

Builtin Binary(Value (*op)(const Value&, const Value&)) {
  return Builtin{FunType{2, 1},
                 [op](Args a) { return std::vector<Value>{op(a[0], a[1])}; }};
}

Builtin Unary(Value (*op)(const Value&)) {
  return Builtin{FunType{1, 1},
                 [op](Args a) { return std::vector<Value>{op(a[0])}; }};
}

Value FromBool(bool b) { return b ? Value(1) : Value(0); }

}  // namespace

void Dialect::Add(Identifier name, Builtin builtin) {
  builtins_[std::move(name)] = std::move(builtin);
}

const Builtin* Dialect::Find(const Identifier& name) const {
  auto it = builtins_.find(name);
  return it == builtins_.end() ? nullptr : &it->second;
}

FunTable Dialect::Table() const {
  FunTable table;
  for (const auto& [name, b] : builtins_) table.emplace(name, b.type);
  return table;
}

Dialect Dialect::EvmPure() {
  Dialect d;
  auto add = [&d](const char* name, Builtin b) {
    d.Add(Identifier(name), std::move(b));
  };
  // Value arithmetic wraps modulo 2^256.
  add("add", Binary([](const Value& a, const Value& b) -> Value { return a + b; }));
  add("sub", Binary([](const Value& a, const Value& b) -> Value { return a - b; }));
  add("mul", Binary([](const Value& a, const Value& b) -> Value { return a * b; }));
  add("div", Binary([](const Value& a, const Value& b) -> Value {
        return b == 0 ? Value(0) : Value(a / b);
      }));
  add("mod", Binary([](const Value& a, const Value& b) -> Value {
        return b == 0 ? Value(0) : Value(a % b);
      }));
  add("lt", Binary([](const Value& a, const Value& b) { return FromBool(a < b); }));
  add("gt", Binary([](const Value& a, const Value& b) { return FromBool(a > b); }));
  add("eq", Binary([](const Value& a, const Value& b) { return FromBool(a == b); }));
  add("and", Binary([](const Value& a, const Value& b) -> Value { return a & b; }));
  add("or", Binary([](const Value& a, const Value& b) -> Value { return a | b; }));
  add("xor", Binary([](const Value& a, const Value& b) -> Value { return a ^ b; }));
  // EVM operand order: shl(shift, value).
  add("shl", Binary([](const Value& shift, const Value& v) -> Value {
        return shift >= 256 ? Value(0) : Value(v << static_cast<unsigned>(shift));
      }));
  add("shr", Binary([](const Value& shift, const Value& v) -> Value {
        return shift >= 256 ? Value(0) : Value(v >> static_cast<unsigned>(shift));
      }));
  add("iszero", Unary([](const Value& a) { return FromBool(a == 0); }));
  add("not", Unary([](const Value& a) -> Value { return ~a; }));
  return d;
}

const Dialect* Dialect::ByName(std::string_view name) {
  static const Dialect kEvmPure = EvmPure();
  static const Dialect kNone;
  if (name == "evm-pure") return &kEvmPure;
  if (name == "none") return &kNone;
  return nullptr;
}

}  // namespace yul
