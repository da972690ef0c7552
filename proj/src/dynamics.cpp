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

#include "yul/dynamics.hpp"

#include <pthread.h>

#include <exception>
#include <set>
#include <stdexcept>
#include <utility>

#include "yul/literal.hpp"
#include "yul/visit.hpp"

namespace yul {
namespace {

using Values = std::vector<Value>;
using ValuesResult = Result<Values, EvalError>;
using ModeResult = Result<Mode, EvalError>;

Unexpected<EvalError> Safety(ErrorKind kind, std::string context) {
  return Unexpected{EvalError::Safety(kind, std::move(context))};
}

Unexpected<EvalError> Limit() { return Unexpected{EvalError::Limit()}; }

// Non-owning handle on a node of the running program.
std::shared_ptr<const Block> Alias(const Block& block) {
  return std::shared_ptr<const Block>(std::shared_ptr<const Block>(), &block);
}

std::string JoinPath(const Path& p) {
  std::string out;
  for (const Identifier& id : p.parts) {
    if (!out.empty()) out += '.';
    out += id.name;
  }
  return out;
}

// Names bound by a declaration statement; empty for anything else.
template <typename F>
void ForEachDeclared(const Statement& s, F&& f) {
  if (const auto* v = As<VariableSingle>(s)) {
    f(v->name);
  } else if (const auto* m = As<VariableMulti>(s)) {
    for (const Identifier& n : m->names) f(n);
  }
}

class Interpreter {
 public:
  Interpreter(const Dialect& dialect, const ExecOptions& options)
      : dialect_(dialect), options_(options), observer_(options.observer) {}

  ValuesResult Expr(const Expression& e, const CState& cs, const FunEnv& env,
                    std::uint64_t limit) {
    if (observer_ == nullptr) return ExprImpl(e, cs, env, limit);
    ValuesResult r = ExprImpl(e, cs, env, limit);
    ExprResult out = r ? ExprResult(EOutcome{cs, *r})
                       : ExprResult(Unexpected{r.error()});
    observer_->OnExpression(e, cs, env, out);
    return r;
  }

  ValuesResult Call(const FunCall& call, const CState& cs, const FunEnv& env,
                    std::uint64_t limit) {
    if (limit == 0) return Limit();
    Values args(call.args.size());
    for (std::size_t i = call.args.size(); i-- > 0;) {
      YUL_ASSIGN_OR_RETURN(args[i], Single(call.args[i], cs, env, limit - 1));
    }
    if (const Builtin* b = dialect_.Find(call.name)) {
      if (args.size() != b->type.inputs) {
        return Safety(ErrorKind::kArityMismatch, call.name.name);
      }
      return b->eval(args);
    }
    std::size_t depth = 0;
    const FunInfo* info = env.Find(call.name, &depth);
    if (info == nullptr) return Safety(ErrorKind::kUnknownFun, call.name.name);
    FunEnv trimmed;
    trimmed.scopes.assign(env.scopes.begin(),
                          env.scopes.begin() + static_cast<std::ptrdiff_t>(depth + 1));
    return Function(*info, args, trimmed, limit - 1);
  }

  ValuesResult Function(const FunInfo& info, const Values& args,
                        const FunEnv& env, std::uint64_t limit) {
    if (limit == 0) return Limit();
    if (args.size() != info.inputs.size()) {
      return Safety(ErrorKind::kArityMismatch,
                    std::to_string(args.size()) + " arguments for " +
                        std::to_string(info.inputs.size()) + " inputs");
    }
    CState local;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (!local.local.emplace(info.inputs[i], args[i]).second) {
        return Safety(ErrorKind::kDuplicateVar, info.inputs[i].name);
      }
    }
    for (const Identifier& out : info.outputs) {
      if (local.local.contains(out)) {
        return Safety(ErrorKind::kDuplicateVar, out.name);
      }
      if (!options_.skip_output_zeroing) local.local.emplace(out, Value(0));
    }
    YUL_ASSIGN_OR_RETURN(Mode mode, BlockRun(*info.body, local, env, limit - 1,
                                             /*restrict_locals=*/true));
    if (mode == Mode::kBreak || mode == Mode::kContinue) {
      return Safety(ErrorKind::kFunctionModeError,
                    "function body ended with " + std::string(ToString(mode)));
    }
    Values results;
    results.reserve(info.outputs.size());
    for (const Identifier& out : info.outputs) {
      auto it = local.local.find(out);
      if (it == local.local.end()) return Safety(ErrorKind::kUnknownVar, out.name);
      results.push_back(it->second);
    }
    return results;
  }

  ModeResult Stmt(const Statement& s, CState& cs, const FunEnv& env,
                  std::uint64_t limit) {
    if (observer_ == nullptr) return StmtImpl(s, cs, env, limit);
    CState before = cs;
    ModeResult r = StmtImpl(s, cs, env, limit);
    StmtResult out = r ? StmtResult(SOutcome{cs, *r})
                       : StmtResult(Unexpected{r.error()});
    observer_->OnStatement(s, before, env, out);
    return r;
  }

  ModeResult BlockRun(const Block& block, CState& cs, const FunEnv& env,
                      std::uint64_t limit, bool restrict_locals) {
    if (limit == 0) return Limit();
    YUL_ASSIGN_OR_RETURN(FunEnv inner, Enter(block, env));
    return Sequence(block.statements, cs, inner, limit - 1, restrict_locals);
  }

 private:
  ValuesResult ExprImpl(const Expression& e, const CState& cs,
                        const FunEnv& env, std::uint64_t limit) {
    if (limit == 0) return Limit();
    return Visit(
        e.node,
        [&](const Path& p) -> ValuesResult {
          if (p.parts.size() != 1) return Safety(ErrorKind::kBadPath, JoinPath(p));
          auto it = cs.local.find(p.parts.front());
          if (it == cs.local.end()) {
            return Safety(ErrorKind::kUnknownVar, p.parts.front().name);
          }
          return Values{it->second};
        },
        [&](const Literal& lit) -> ValuesResult {
          YUL_ASSIGN_OR_RETURN(Value v, EvalLiteral(lit, dialect_));
          return Values{v};
        },
        [&](const FunCall& call) { return Call(call, cs, env, limit - 1); });
  }

  Result<Value, EvalError> Single(const Expression& e, const CState& cs,
                                  const FunEnv& env, std::uint64_t limit) {
    YUL_ASSIGN_OR_RETURN(Values vs, Expr(e, cs, env, limit));
    if (vs.size() != 1) {
      return Safety(ErrorKind::kNonSingleValue,
                    Print(e) + " yielded " + std::to_string(vs.size()) + " values");
    }
    return vs.front();
  }

  ValuesResult CallExpecting(const FunCall& call, std::size_t n,
                             const CState& cs, const FunEnv& env,
                             std::uint64_t limit) {
    YUL_ASSIGN_OR_RETURN(Values vs, Call(call, cs, env, limit));
    if (vs.size() != n) {
      return Safety(ErrorKind::kResultCountMismatch,
                    call.name.name + " returned " + std::to_string(vs.size()) +
                        " values, expected " + std::to_string(n));
    }
    return vs;
  }

  static Result<Identifier, EvalError> Target(const Path& p, const CState& cs) {
    if (p.parts.size() != 1) return Safety(ErrorKind::kBadPath, JoinPath(p));
    if (!cs.local.contains(p.parts.front())) {
      return Safety(ErrorKind::kUnknownVar, p.parts.front().name);
    }
    return p.parts.front();
  }

  // Pushes the block's function scope after checking that none of its
  // names is already visible.
  Result<FunEnv, EvalError> Enter(const Block& block, const FunEnv& env) {
    FunEnv inner = env;
    FunScope scope;
    for (const FunDef* def : HoistedFunDefs(block)) {
      if (dialect_.Contains(def->name) || env.Find(def->name) != nullptr ||
          scope.contains(def->name)) {
        return Safety(ErrorKind::kDuplicateFun, def->name.name);
      }
      scope.emplace(def->name, FunInfo{def->inputs, def->outputs, Alias(def->body)});
    }
    inner.Push(std::move(scope));
    if (observer_ != nullptr) observer_->OnBlockEntry(block, inner);
    return inner;
  }

  // Runs statements until one ends non-regularly. Variables declared by
  // these statements are dropped afterwards when `restrict_locals` is set.
  ModeResult Sequence(const std::vector<Statement>& stmts, CState& cs,
                      const FunEnv& env, std::uint64_t limit,
                      bool restrict_locals) {
    Mode mode = Mode::kRegular;
    std::size_t done = 0;
    for (const Statement& s : stmts) {
      YUL_ASSIGN_OR_RETURN(mode, Stmt(s, cs, env, limit));
      ++done;
      if (mode != Mode::kRegular) break;
    }
    if (restrict_locals) {
      for (std::size_t i = 0; i < done; ++i) {
        ForEachDeclared(stmts[i], [&](const Identifier& n) { cs.local.erase(n); });
      }
    }
    return mode;
  }

  ModeResult StmtImpl(const Statement& s, CState& cs, const FunEnv& env,
                      std::uint64_t limit) {
    if (limit == 0) return Limit();
    const std::uint64_t sub = limit - 1;
    return Visit(
        s.node,
        [&](const Block& b) { return BlockRun(b, cs, env, sub, true); },
        [&](const VariableSingle& v) -> ModeResult {
          if (cs.local.contains(v.name)) {
            return Safety(ErrorKind::kDuplicateVar, v.name.name);
          }
          Value init = 0;
          if (v.init) {
            YUL_ASSIGN_OR_RETURN(init, Single(*v.init, cs, env, sub));
          }
          cs.local.emplace(v.name, init);
          return Mode::kRegular;
        },
        [&](const VariableMulti& v) -> ModeResult {
          std::set<Identifier> fresh;
          for (const Identifier& n : v.names) {
            if (cs.local.contains(n) || !fresh.insert(n).second) {
              return Safety(ErrorKind::kDuplicateVar, n.name);
            }
          }
          Values init(v.names.size(), Value(0));
          if (v.init) {
            YUL_ASSIGN_OR_RETURN(init, CallExpecting(*v.init, v.names.size(), cs, env, sub));
          }
          for (std::size_t i = 0; i < v.names.size(); ++i) {
            cs.local.emplace(v.names[i], init[i]);
          }
          return Mode::kRegular;
        },
        [&](const AssignSingle& a) -> ModeResult {
          YUL_ASSIGN_OR_RETURN(Identifier target, Target(a.target, cs));
          YUL_ASSIGN_OR_RETURN(Value v, Single(a.value, cs, env, sub));
          cs.local[target] = v;
          return Mode::kRegular;
        },
        [&](const AssignMulti& a) -> ModeResult {
          std::vector<Identifier> targets;
          for (const Path& p : a.targets) {
            YUL_ASSIGN_OR_RETURN(Identifier t, Target(p, cs));
            for (const Identifier& prior : targets) {
              if (prior == t) return Safety(ErrorKind::kDuplicateVar, t.name);
            }
            targets.push_back(std::move(t));
          }
          YUL_ASSIGN_OR_RETURN(Values vs,
                               CallExpecting(a.value, targets.size(), cs, env, sub));
          for (std::size_t i = 0; i < targets.size(); ++i) cs.local[targets[i]] = vs[i];
          return Mode::kRegular;
        },
        [&](const FunCallStatement& c) -> ModeResult {
          YUL_RETURN_IF_ERROR(CallExpecting(c.call, 0, cs, env, sub));
          return Mode::kRegular;
        },
        [&](const If& i) -> ModeResult {
          YUL_ASSIGN_OR_RETURN(Value test, Single(i.test, cs, env, sub));
          if (test == 0) return Mode::kRegular;
          return BlockRun(i.body, cs, env, sub, true);
        },
        [&](const Switch& sw) -> ModeResult {
          YUL_ASSIGN_OR_RETURN(Value target, Single(sw.target, cs, env, sub));
          if (sw.cases.empty() && !sw.default_block) {
            return Safety(ErrorKind::kEmptySwitch, "switch without cases");
          }
          for (const SwitchCase& c : sw.cases) {
            YUL_ASSIGN_OR_RETURN(Value v, EvalLiteral(c.value, dialect_));
            if (v == target) return BlockRun(c.body, cs, env, sub, true);
          }
          if (sw.default_block) return BlockRun(*sw.default_block, cs, env, sub, true);
          return Mode::kRegular;
        },
        [&](const For& f) { return ForLoop(f, cs, env, limit); },
        [&](const Break&) -> ModeResult { return Mode::kBreak; },
        [&](const Continue&) -> ModeResult { return Mode::kContinue; },
        [&](const Leave&) -> ModeResult { return Mode::kLeave; },
        [&](const FunDef&) -> ModeResult { return Mode::kRegular; });
  }

  // A loop with a nonempty initializer costs exactly what the equivalent
  // `{ init for { } test { update } { body } }` costs: one unit for the
  // wrapping block and one for the inner loop statement. With an empty
  // initializer the iterations start directly below the statement's limit.
  ModeResult ForLoop(const For& f, CState& cs, const FunEnv& env,
                     std::uint64_t limit) {
    const bool has_init = !f.init.statements.empty();
    std::uint64_t fuel = limit - 1;
    if (has_init && fuel == 0) return Limit();
    YUL_ASSIGN_OR_RETURN(FunEnv inner, Enter(f.init, env));
    Mode mode = Mode::kRegular;
    std::size_t done = 0;
    if (has_init) {
      for (const Statement& s : f.init.statements) {
        YUL_ASSIGN_OR_RETURN(mode, Stmt(s, cs, inner, fuel - 1));
        ++done;
        if (mode != Mode::kRegular) break;
      }
      if (mode == Mode::kBreak) {
        return Safety(ErrorKind::kBreakOutsideLoop, "break in loop initializer");
      }
      if (mode == Mode::kContinue) {
        return Safety(ErrorKind::kContinueOutsideLoop, "continue in loop initializer");
      }
      if (mode == Mode::kRegular) {
        if (fuel - 1 == 0) return Limit();
        fuel -= 2;
      }
    }
    if (mode == Mode::kRegular) {
      YUL_ASSIGN_OR_RETURN(mode, Iterate(f, cs, inner, fuel));
    }
    for (std::size_t i = 0; i < done; ++i) {
      ForEachDeclared(f.init.statements[i],
                      [&](const Identifier& n) { cs.local.erase(n); });
    }
    return mode;
  }

  // Each iteration consumes one unit; test, body and update of an iteration
  // all run one unit below it.
  ModeResult Iterate(const For& f, CState& cs, const FunEnv& env,
                     std::uint64_t fuel) {
    for (;; --fuel) {
      if (fuel == 0) return Limit();
      YUL_ASSIGN_OR_RETURN(Value test, Single(f.test, cs, env, fuel - 1));
      if (test == 0) return Mode::kRegular;
      YUL_ASSIGN_OR_RETURN(Mode body, BlockRun(f.body, cs, env, fuel - 1, true));
      if (body == Mode::kBreak) return Mode::kRegular;
      if (body == Mode::kLeave) return Mode::kLeave;
      YUL_ASSIGN_OR_RETURN(Mode update, BlockRun(f.update, cs, env, fuel - 1, true));
      if (update == Mode::kBreak) {
        return Safety(ErrorKind::kBreakOutsideLoop, "break in loop update");
      }
      if (update == Mode::kContinue) {
        return Safety(ErrorKind::kContinueOutsideLoop, "continue in loop update");
      }
      if (update == Mode::kLeave) return Mode::kLeave;
    }
  }

  const Dialect& dialect_;
  const ExecOptions& options_;
  ExecObserver* observer_;
};

std::shared_ptr<const FunScope> EmptyScope() {
  static const auto kEmpty = std::make_shared<const FunScope>();
  return kEmpty;
}

}  // namespace

bool FunInfo::operator==(const FunInfo& other) const {
  return inputs == other.inputs && outputs == other.outputs &&
         (body == other.body || *body == *other.body);
}

FunInfo MakeFunInfo(const FunDef& def) {
  return FunInfo{def.inputs, def.outputs, std::make_shared<const Block>(def.body)};
}

void FunEnv::Push(FunScope scope) {
  scopes.push_back(scope.empty() ? EmptyScope()
                                 : std::make_shared<const FunScope>(std::move(scope)));
}

const FunInfo* FunEnv::Find(const Identifier& name, std::size_t* depth) const {
  for (std::size_t i = scopes.size(); i-- > 0;) {
    auto it = scopes[i]->find(name);
    if (it != scopes[i]->end()) {
      if (depth != nullptr) *depth = i;
      return &it->second;
    }
  }
  return nullptr;
}

bool FunEnv::operator==(const FunEnv& other) const {
  if (scopes.size() != other.scopes.size()) return false;
  for (std::size_t i = 0; i < scopes.size(); ++i) {
    if (scopes[i] != other.scopes[i] && *scopes[i] != *other.scopes[i]) return false;
  }
  return true;
}

FunScope ScopeOf(const Block& block) {
  FunScope scope;
  for (const FunDef* def : HoistedFunDefs(block)) {
    scope.emplace(def->name, MakeFunInfo(*def));
  }
  return scope;
}

std::string EvalError::ClassName() const {
  if (IsLimit()) return "limit";
  return "safety:" + std::string(yul::ToString(kind));
}

std::string EvalError::ToString() const {
  if (IsLimit()) return "limit";
  return ClassName() + (context.empty() ? "" : ": " + context);
}

Result<Value, EvalError> EvalLiteral(const Literal& lit, const Dialect& dialect) {
  auto v = LiteralValue(lit, dialect.string_alignment());
  if (!v) return Safety(v.error(), Print(lit));
  return *v;
}

ExprResult ExecExpression(const Expression& expr, const CState& cstate,
                          const FunEnv& funenv, const Dialect& dialect,
                          std::uint64_t limit, const ExecOptions& options) {
  Interpreter interp(dialect, options);
  YUL_ASSIGN_OR_RETURN(Values vs, interp.Expr(expr, cstate, funenv, limit));
  return EOutcome{cstate, std::move(vs)};
}

ExprResult ExecFunCall(const FunCall& call, const CState& cstate,
                       const FunEnv& funenv, const Dialect& dialect,
                       std::uint64_t limit, const ExecOptions& options) {
  Interpreter interp(dialect, options);
  YUL_ASSIGN_OR_RETURN(Values vs, interp.Call(call, cstate, funenv, limit));
  return EOutcome{cstate, std::move(vs)};
}

Result<std::vector<Value>, EvalError> ExecFunction(
    const FunInfo& info, const std::vector<Value>& args,
    const FunEnv& trimmed_env, const Dialect& dialect, std::uint64_t limit,
    const ExecOptions& options) {
  return Interpreter(dialect, options).Function(info, args, trimmed_env, limit);
}

StmtResult ExecStatement(const Statement& stmt, const CState& cstate,
                         const FunEnv& funenv, const Dialect& dialect,
                         std::uint64_t limit, const ExecOptions& options) {
  CState cs = cstate;
  YUL_ASSIGN_OR_RETURN(Mode mode,
                       Interpreter(dialect, options).Stmt(stmt, cs, funenv, limit));
  return SOutcome{std::move(cs), mode};
}

StmtResult ExecBlock(const Block& block, const CState& cstate,
                     const FunEnv& funenv, const Dialect& dialect,
                     std::uint64_t limit, const ExecOptions& options) {
  CState cs = cstate;
  YUL_ASSIGN_OR_RETURN(Mode mode, Interpreter(dialect, options)
                                      .BlockRun(block, cs, funenv, limit, true));
  return SOutcome{std::move(cs), mode};
}

StmtResult ExecTop(const Block& block, const CState& initial,
                   const Dialect& dialect, std::uint64_t limit,
                   const ExecOptions& options) {
  CState cs = initial;
  YUL_ASSIGN_OR_RETURN(Mode mode, Interpreter(dialect, options)
                                      .BlockRun(block, cs, FunEnv{}, limit, false));
  if (mode != Mode::kRegular) {
    return Safety(ErrorKind::kModeViolation,
                  "program ended with " + std::string(ToString(mode)));
  }
  return SOutcome{std::move(cs), mode};
}

VarTable CStateToVars(const CState& cstate) {
  VarTable vars;
  for (const auto& [name, value] : cstate.local) vars.insert(vars.end(), name);
  return vars;
}

FunTable FunEnvToFunTable(const FunEnv& funenv) {
  FunTable table;
  for (const auto& scope : funenv.scopes) {
    for (const auto& [name, info] : *scope) {
      table[name] = FunType{info.inputs.size(), info.outputs.size()};
    }
  }
  return table;
}

bool OkEq(const StmtResult& a, const StmtResult& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a.has_value() || *a == *b;
}

void RunWithLargeStack(const std::function<void()>& fn) {
  // Enough for several hundred thousand nested calls.
  constexpr std::size_t kStackBytes = std::size_t{1} << 30;
  struct Task {
    const std::function<void()>* fn;
    std::exception_ptr error;
  } task{&fn, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kStackBytes);
  pthread_t thread;
  auto entry = [](void* arg) -> void* {
    auto* t = static_cast<Task*>(arg);
    try {
      (*t->fn)();
    } catch (...) {
      t->error = std::current_exception();
    }
    return nullptr;
  };
  int rc = pthread_create(&thread, &attr, entry, &task);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    fn();  // fall back to the current stack
    return;
  }
  pthread_join(thread, nullptr);
  if (task.error) std::rethrow_exception(task.error);
}

}  // namespace yul
