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

// Defensive big-step interpreter. Every safety condition the static checker
// enforces is re-checked at run time, and a fuel counter bounds the depth of
// the recursion so that every call terminates.

#ifndef YUL_DYNAMICS_HPP_
#define YUL_DYNAMICS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "yul/ast.hpp"
#include "yul/dialect.hpp"
#include "yul/errors.hpp"
#include "yul/mode.hpp"
#include "yul/result.hpp"
#include "yul/statics.hpp"
#include "yul/value.hpp"

namespace yul {

using LocalState = std::map<Identifier, Value>;

struct CState {
  LocalState local;
  friend bool operator==(const CState&, const CState&) = default;
};

struct FunInfo {
  std::vector<Identifier> inputs;
  std::vector<Identifier> outputs;
  // Never null. May alias a node of the program being run.
  std::shared_ptr<const Block> body;

  bool operator==(const FunInfo& other) const;
};

FunInfo MakeFunInfo(const FunDef& def);

using FunScope = std::map<Identifier, FunInfo>;

// Stack of scopes, innermost last. Scopes are shared, so copying and
// trimming an environment is cheap.
struct FunEnv {
  std::vector<std::shared_ptr<const FunScope>> scopes;

  void Push(FunScope scope);
  // Innermost first; null if absent.
  const FunInfo* Find(const Identifier& name, std::size_t* depth = nullptr) const;

  bool operator==(const FunEnv& other) const;
};

// The scope a block contributes: its direct function definitions.
FunScope ScopeOf(const Block& block);

struct EOutcome {
  CState cstate;
  std::vector<Value> values;
  friend bool operator==(const EOutcome&, const EOutcome&) = default;
};

struct SOutcome {
  CState cstate;
  Mode mode = Mode::kRegular;
  friend bool operator==(const SOutcome&, const SOutcome&) = default;
};

struct EvalError {
  enum class Class : std::uint8_t { kLimit, kSafety };

  Class klass = Class::kLimit;
  ErrorKind kind = ErrorKind::kUnknownVar;  // meaningful for kSafety only
  std::string context;

  static EvalError Limit() { return {}; }
  static EvalError Safety(ErrorKind kind, std::string context) {
    return {Class::kSafety, kind, std::move(context)};
  }
  bool IsLimit() const { return klass == Class::kLimit; }

  // "limit" or "safety:<kind>".
  std::string ClassName() const;
  std::string ToString() const;
};

using ExprResult = Result<EOutcome, EvalError>;
using StmtResult = Result<SOutcome, EvalError>;

// Callbacks fired during execution, for instrumented runs. Each receives
// the state before the construct ran and its result.
class ExecObserver {
 public:
  virtual ~ExecObserver() = default;
  virtual void OnExpression(const Expression&, const CState& /*before*/,
                            const FunEnv&, const ExprResult&) {}
  virtual void OnStatement(const Statement&, const CState& /*before*/,
                           const FunEnv&, const StmtResult&) {}
  // After the block's own scope has been pushed.
  virtual void OnBlockEntry(const Block&, const FunEnv&) {}
};

struct ExecOptions {
  ExecObserver* observer = nullptr;
  // Mutation knob for testing the test suites: function outputs start
  // unbound instead of zero.
  bool skip_output_zeroing = false;
};

Result<Value, EvalError> EvalLiteral(const Literal& lit, const Dialect& dialect);

ExprResult ExecExpression(const Expression& expr, const CState& cstate,
                          const FunEnv& funenv, const Dialect& dialect,
                          std::uint64_t limit, const ExecOptions& options = {});

ExprResult ExecFunCall(const FunCall& call, const CState& cstate,
                       const FunEnv& funenv, const Dialect& dialect,
                       std::uint64_t limit, const ExecOptions& options = {});

// Runs a function in the environment trimmed to its defining scope.
Result<std::vector<Value>, EvalError> ExecFunction(
    const FunInfo& info, const std::vector<Value>& args,
    const FunEnv& trimmed_env, const Dialect& dialect, std::uint64_t limit,
    const ExecOptions& options = {});

StmtResult ExecStatement(const Statement& stmt, const CState& cstate,
                         const FunEnv& funenv, const Dialect& dialect,
                         std::uint64_t limit, const ExecOptions& options = {});

StmtResult ExecBlock(const Block& block, const CState& cstate,
                     const FunEnv& funenv, const Dialect& dialect,
                     std::uint64_t limit, const ExecOptions& options = {});

// Entry point for whole programs: runs the top block in an empty function
// environment. Unlike ExecBlock the variables declared at the top level are
// kept in the result, so a program's final state is observable. A
// non-regular final mode is a kModeViolation safety error.
StmtResult ExecTop(const Block& block, const CState& initial,
                   const Dialect& dialect, std::uint64_t limit,
                   const ExecOptions& options = {});

VarTable CStateToVars(const CState& cstate);
// Merges the scopes; inner scopes win on clashes.
FunTable FunEnvToFunTable(const FunEnv& funenv);

// Both successful and equal, or both errors of any kind.
bool OkEq(const StmtResult& a, const StmtResult& b);

// Runs `fn` on a thread with a large stack so that deep interpretation at
// high fuel does not overflow the native stack.
void RunWithLargeStack(const std::function<void()>& fn);

}  // namespace yul

#endif  // YUL_DYNAMICS_HPP_
