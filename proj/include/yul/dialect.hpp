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

// Built-in functions available to programs. Only pure builtins are modeled:
// there is no global EVM state.

#ifndef YUL_DIALECT_HPP_
#define YUL_DIALECT_HPP_

#include <functional>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "yul/ast.hpp"
#include "yul/literal.hpp"
#include "yul/statics.hpp"
#include "yul/value.hpp"

namespace yul {

struct Builtin {
  FunType type;
  // Receives exactly type.inputs arguments in source order and returns
  // exactly type.outputs values.
  std::function<std::vector<Value>(std::span<const Value>)> eval;
};

class Dialect {
 public:
  // No builtins at all.
  Dialect() = default;

  // add sub mul div mod lt gt eq and or xor shl shr iszero not.
  static Dialect EvmPure();

  // "evm-pure" or "none".
  static const Dialect* ByName(std::string_view name);

  void Add(Identifier name, Builtin builtin);
  const Builtin* Find(const Identifier& name) const;
  bool Contains(const Identifier& name) const { return Find(name) != nullptr; }

  // Arity table to seed the static checker with.
  FunTable Table() const;

  StringAlignment string_alignment() const { return string_alignment_; }
  void set_string_alignment(StringAlignment a) { string_alignment_ = a; }

 private:
  std::map<Identifier, Builtin> builtins_;
  StringAlignment string_alignment_ = StringAlignment::kBase256;
};

}  // namespace yul

#endif  // YUL_DIALECT_HPP_
