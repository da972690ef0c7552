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
// Static safety checks over the abstract syntax: scoping of variables and
// functions, call arities, literal bounds, and the termination-mode calculus
// that restricts where break, continue and leave may appear.

#ifndef YUL_STATICS_HPP_
#define YUL_STATICS_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "yul/ast.hpp"
#include "yul/errors.hpp"
#include "yul/mode.hpp"
#include "yul/result.hpp"

namespace yul {

// Accessible variables.
using VarTable = std::set<Identifier>;

// Number of inputs and outputs of a function.
struct FunType {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  friend bool operator==(const FunType&, const FunType&) = default;
};

using FunTable = std::map<Identifier, FunType>;

struct VarsModes {
  VarTable vars;
  ModeSet modes;  // never empty
  friend bool operator==(const VarsModes&, const VarsModes&) = default;
};

struct StaticError {
  ErrorKind kind;
  std::string context;

  std::string ToString() const;
};

// Receives the function table in force inside every block the checker
// visits (after the block's own definitions are added). Used to correlate
// static tables with interpreter environments.
class StaticObserver {
 public:
  virtual ~StaticObserver() = default;
  virtual void OnBlock(const Block& block, const FunTable& funs) = 0;
};

Status<StaticError> CheckSafeLiteral(const Literal& lit);

// Returns the number of values the expression yields.
Result<std::size_t, StaticError> CheckSafeExpression(const Expression& expr,
                                                     const VarTable& vars,
                                                     const FunTable& funs);

// `funs` must already contain the functions hoisted from the enclosing block.
Result<VarsModes, StaticError> CheckSafeStatement(
    const Statement& stmt, const VarTable& vars, const FunTable& funs,
    StaticObserver* observer = nullptr);

Result<ModeSet, StaticError> CheckSafeBlock(const Block& block,
                                            const VarTable& vars,
                                            const FunTable& funs,
                                            StaticObserver* observer = nullptr);

// A whole program: the top block must terminate regularly.
Status<StaticError> CheckSafeTop(const Block& block,
                                 const FunTable& dialect_funs,
                                 const VarTable& initial_vars = {},
                                 StaticObserver* observer = nullptr);

// Arities of the functions defined directly in `block`.
Result<FunTable, StaticError> FunTableOf(const Block& block);

}  // namespace yul

#endif  // YUL_STATICS_HPP_
