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

#include "yul/statics.hpp"

#include <string_view>
#include <vector>

#include "yul/literal.hpp"
#include "yul/visit.hpp"

namespace yul {
namespace {

// 2^256 in decimal.
constexpr std::string_view kTwoTo256 =
    "115792089237316195423570985008687907853269984665640564039457584007913129639936";

Unexpected<StaticError> Fail(ErrorKind kind, std::string context) {
  return Unexpected{StaticError{kind, std::move(context)}};
}

std::string_view StripLeadingZeros(std::string_view digits) {
  size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  return digits.substr(i);
}

// Decimal comparison on digit strings, independent of big-integer code.
bool DecimalBelowTwoTo256(std::string_view digits) {
  digits = StripLeadingZeros(digits);
  if (digits.size() != kTwoTo256.size()) return digits.size() < kTwoTo256.size();
  return digits < kTwoTo256;
}

constexpr ModeSet kRegularOrLeave = {Mode::kRegular, Mode::kLeave};

class Checker {
 public:
  explicit Checker(StaticObserver* observer) : observer_(observer) {}

  Result<std::size_t, StaticError> Expr(const Expression& expr,
                                        const VarTable& vars,
                                        const FunTable& funs) {
    return Visit(
        expr.node,
        [&](const Path& p) -> Result<std::size_t, StaticError> {
          YUL_RETURN_IF_ERROR(CheckVarRef(p, vars));
          return std::size_t{1};
        },
        [&](const Literal& lit) -> Result<std::size_t, StaticError> {
          YUL_RETURN_IF_ERROR(CheckSafeLiteral(lit));
          return std::size_t{1};
        },
        [&](const FunCall& call) { return Call(call, vars, funs); });
  }

  Result<VarsModes, StaticError> Stmt(const Statement& stmt,
                                      const VarTable& vars,
                                      const FunTable& funs) {
    using R = Result<VarsModes, StaticError>;
    const ModeSet regular = {Mode::kRegular};
    return Visit(
        stmt.node,
        [&](const Block& b) -> R {
          YUL_ASSIGN_OR_RETURN(ModeSet modes, BlockModes(b, vars, funs));
          return VarsModes{vars, modes};
        },
        [&](const VariableSingle& v) -> R {
          if (vars.contains(v.name)) {
            return Fail(ErrorKind::kDuplicateVar, v.name.name);
          }
          if (v.init) YUL_RETURN_IF_ERROR(SingleValue(*v.init, vars, funs));
          VarTable out = vars;
          out.insert(v.name);
          return VarsModes{std::move(out), regular};
        },
        [&](const VariableMulti& v) -> R {
          VarTable out = vars;
          for (const Identifier& name : v.names) {
            if (!out.insert(name).second) {
              return Fail(ErrorKind::kDuplicateVar, name.name);
            }
          }
          if (v.init) {
            YUL_RETURN_IF_ERROR(CallWithResults(*v.init, v.names.size(), vars, funs));
          }
          return VarsModes{std::move(out), regular};
        },
        [&](const AssignSingle& a) -> R {
          YUL_RETURN_IF_ERROR(CheckVarRef(a.target, vars));
          YUL_RETURN_IF_ERROR(SingleValue(a.value, vars, funs));
          return VarsModes{vars, regular};
        },
        [&](const AssignMulti& a) -> R {
          VarTable seen;
          for (const Path& p : a.targets) {
            YUL_RETURN_IF_ERROR(CheckVarRef(p, vars));
            if (!seen.insert(p.parts.front()).second) {
              return Fail(ErrorKind::kDuplicateVar,
                          "assigned twice: " + p.parts.front().name);
            }
          }
          YUL_RETURN_IF_ERROR(CallWithResults(a.value, a.targets.size(), vars, funs));
          return VarsModes{vars, regular};
        },
        [&](const FunCallStatement& c) -> R {
          YUL_RETURN_IF_ERROR(CallWithResults(c.call, 0, vars, funs));
          return VarsModes{vars, regular};
        },
        [&](const If& i) -> R {
          YUL_RETURN_IF_ERROR(SingleValue(i.test, vars, funs));
          YUL_ASSIGN_OR_RETURN(ModeSet modes, BlockModes(i.body, vars, funs));
          modes.Insert(Mode::kRegular);
          return VarsModes{vars, modes};
        },
        [&](const Switch& sw) -> R { return SwitchStmt(sw, vars, funs); },
        [&](const For& f) -> R { return ForStmt(f, vars, funs); },
        [&](const Break&) -> R { return VarsModes{vars, {Mode::kBreak}}; },
        [&](const Continue&) -> R { return VarsModes{vars, {Mode::kContinue}}; },
        [&](const Leave&) -> R { return VarsModes{vars, {Mode::kLeave}}; },
        [&](const FunDef& f) -> R {
          YUL_RETURN_IF_ERROR(FunDefBody(f, funs));
          return VarsModes{vars, regular};
        });
  }

  Result<ModeSet, StaticError> BlockModes(const Block& block,
                                          const VarTable& vars,
                                          const FunTable& funs) {
    FunTable inner = funs;
    YUL_RETURN_IF_ERROR(AddHoisted(block, inner));
    if (observer_ != nullptr) observer_->OnBlock(block, inner);
    YUL_ASSIGN_OR_RETURN(VarsModes vm, Sequence(block.statements, vars, inner));
    return vm.modes;
  }

  // Checks statements left to right, threading the variable table. The
  // resulting mode set follows the block rule: non-regular modes of any
  // statement, plus regular when every statement may end regularly.
  Result<VarsModes, StaticError> Sequence(const std::vector<Statement>& stmts,
                                          const VarTable& vars,
                                          const FunTable& funs) {
    VarTable current = vars;
    ModeSet modes;
    bool all_regular = true;
    for (const Statement& s : stmts) {
      YUL_ASSIGN_OR_RETURN(VarsModes vm, Stmt(s, current, funs));
      current = std::move(vm.vars);
      modes = modes.Union(vm.modes.Without(Mode::kRegular));
      all_regular = all_regular && vm.modes.Contains(Mode::kRegular);
    }
    if (all_regular) modes.Insert(Mode::kRegular);
    return VarsModes{std::move(current), modes};
  }

  static Status<StaticError> AddHoisted(const Block& block, FunTable& funs) {
    for (const FunDef* def : HoistedFunDefs(block)) {
      auto [it, inserted] = funs.emplace(
          def->name, FunType{def->inputs.size(), def->outputs.size()});
      if (!inserted) return Fail(ErrorKind::kDuplicateFun, def->name.name);
    }
    return Ok{};
  }

 private:
  static Status<StaticError> CheckVarRef(const Path& p, const VarTable& vars) {
    if (p.parts.size() != 1) {
      std::string text;
      for (const Identifier& id : p.parts) text += (text.empty() ? "" : ".") + id.name;
      return Fail(ErrorKind::kBadPath, text);
    }
    if (!vars.contains(p.parts.front())) {
      return Fail(ErrorKind::kUnknownVar, p.parts.front().name);
    }
    return Ok{};
  }

  Status<StaticError> SingleValue(const Expression& e, const VarTable& vars,
                                  const FunTable& funs) {
    YUL_ASSIGN_OR_RETURN(std::size_t n, Expr(e, vars, funs));
    if (n != 1) {
      return Fail(ErrorKind::kNonSingleValue,
                  Print(e) + " yields " + std::to_string(n) + " values");
    }
    return Ok{};
  }

  Result<std::size_t, StaticError> Call(const FunCall& call,
                                        const VarTable& vars,
                                        const FunTable& funs) {
    auto it = funs.find(call.name);
    if (it == funs.end()) return Fail(ErrorKind::kUnknownFun, call.name.name);
    if (call.args.size() != it->second.inputs) {
      return Fail(ErrorKind::kArityMismatch,
                  call.name.name + " takes " + std::to_string(it->second.inputs) +
                      " arguments, given " + std::to_string(call.args.size()));
    }
    for (const Expression& arg : call.args) {
      YUL_RETURN_IF_ERROR(SingleValue(arg, vars, funs));
    }
    return it->second.outputs;
  }

  Status<StaticError> CallWithResults(const FunCall& call, std::size_t expected,
                                      const VarTable& vars,
                                      const FunTable& funs) {
    YUL_ASSIGN_OR_RETURN(std::size_t n, Call(call, vars, funs));
    if (n != expected) {
      return Fail(ErrorKind::kResultCountMismatch,
                  call.name.name + " returns " + std::to_string(n) +
                      " values, expected " + std::to_string(expected));
    }
    return Ok{};
  }

  Result<VarsModes, StaticError> SwitchStmt(const Switch& sw,
                                            const VarTable& vars,
                                            const FunTable& funs) {
    YUL_RETURN_IF_ERROR(SingleValue(sw.target, vars, funs));
    if (sw.cases.empty() && !sw.default_block) {
      return Fail(ErrorKind::kEmptySwitch, "switch without case or default");
    }
    std::vector<Value> seen;
    ModeSet modes;
    for (const SwitchCase& c : sw.cases) {
      YUL_RETURN_IF_ERROR(CheckSafeLiteral(c.value));
      Value v = LiteralValue(c.value).value();
      for (const Value& prior : seen) {
        if (prior == v) return Fail(ErrorKind::kDuplicateCase, Print(c.value));
      }
      seen.push_back(v);
      YUL_ASSIGN_OR_RETURN(ModeSet m, BlockModes(c.body, vars, funs));
      modes = modes.Union(m);
    }
    if (sw.default_block) {
      YUL_ASSIGN_OR_RETURN(ModeSet m, BlockModes(*sw.default_block, vars, funs));
      modes = modes.Union(m);
    } else {
      modes.Insert(Mode::kRegular);
    }
    return VarsModes{vars, modes};
  }

  // Declarations and definitions in the init block scope over the whole
  // loop; none of them escape it.
  Result<VarsModes, StaticError> ForStmt(const For& f, const VarTable& vars,
                                         const FunTable& funs) {
    FunTable loop_funs = funs;
    YUL_RETURN_IF_ERROR(AddHoisted(f.init, loop_funs));
    if (observer_ != nullptr) observer_->OnBlock(f.init, loop_funs);
    YUL_ASSIGN_OR_RETURN(VarsModes init, Sequence(f.init.statements, vars, loop_funs));
    if (!init.modes.SubsetOf(kRegularOrLeave)) {
      return Fail(ErrorKind::kModeViolation,
                  "loop initializer may end with " + init.modes.ToString());
    }
    YUL_RETURN_IF_ERROR(SingleValue(f.test, init.vars, loop_funs));
    YUL_ASSIGN_OR_RETURN(ModeSet update, BlockModes(f.update, init.vars, loop_funs));
    if (!update.SubsetOf(kRegularOrLeave)) {
      return Fail(ErrorKind::kModeViolation,
                  "loop update may end with " + update.ToString());
    }
    YUL_ASSIGN_OR_RETURN(ModeSet body, BlockModes(f.body, init.vars, loop_funs));
    ModeSet modes = {Mode::kRegular};
    if (init.modes.Contains(Mode::kLeave) || update.Contains(Mode::kLeave) ||
        body.Contains(Mode::kLeave)) {
      modes.Insert(Mode::kLeave);
    }
    return VarsModes{vars, modes};
  }

  Status<StaticError> FunDefBody(const FunDef& f, const FunTable& funs) {
    VarTable params;
    for (const auto* list : {&f.inputs, &f.outputs}) {
      for (const Identifier& name : *list) {
        if (!params.insert(name).second) {
          return Fail(ErrorKind::kDuplicateVar,
                      "parameter " + name.name + " of " + f.name.name);
        }
      }
    }
    YUL_ASSIGN_OR_RETURN(ModeSet modes, BlockModes(f.body, params, funs));
    if (!modes.SubsetOf(kRegularOrLeave)) {
      return Fail(ErrorKind::kModeViolation,
                  "body of " + f.name.name + " may end with " + modes.ToString());
    }
    return Ok{};
  }

  StaticObserver* observer_;
};

}  // namespace

std::string StaticError::ToString() const {
  return std::string(yul::ToString(kind)) + ": " + context;
}

Status<StaticError> CheckSafeLiteral(const Literal& lit) {
  using R = Status<StaticError>;
  return Visit(
      lit.value, [](const BoolLiteral&) -> R { return Ok{}; },
      [](const DecNumber& d) -> R {
        if (!DecimalBelowTwoTo256(d.digits)) {
          return Fail(ErrorKind::kLiteralTooLarge, d.digits);
        }
        return Ok{};
      },
      [](const HexNumber& h) -> R {
        if (StripLeadingZeros(h.digits).size() > 64) {
          return Fail(ErrorKind::kLiteralTooLarge, "0x" + h.digits);
        }
        return Ok{};
      },
      [&](const PlainString& s) -> R {
        if (s.elements.size() > 32) {
          return Fail(ErrorKind::kStringTooLong,
                      std::to_string(s.elements.size()) + " bytes");
        }
        return Ok{};
      },
      [](const HexString& h) -> R {
        if (h.digits.size() > 64) {
          return Fail(ErrorKind::kStringTooLong,
                      std::to_string(h.digits.size() / 2) + " bytes");
        }
        return Ok{};
      });
}

Result<std::size_t, StaticError> CheckSafeExpression(const Expression& expr,
                                                     const VarTable& vars,
                                                     const FunTable& funs) {
  return Checker(nullptr).Expr(expr, vars, funs);
}

Result<VarsModes, StaticError> CheckSafeStatement(const Statement& stmt,
                                                  const VarTable& vars,
                                                  const FunTable& funs,
                                                  StaticObserver* observer) {
  return Checker(observer).Stmt(stmt, vars, funs);
}

Result<ModeSet, StaticError> CheckSafeBlock(const Block& block,
                                            const VarTable& vars,
                                            const FunTable& funs,
                                            StaticObserver* observer) {
  return Checker(observer).BlockModes(block, vars, funs);
}

Status<StaticError> CheckSafeTop(const Block& block,
                                 const FunTable& dialect_funs,
                                 const VarTable& initial_vars,
                                 StaticObserver* observer) {
  YUL_ASSIGN_OR_RETURN(ModeSet modes,
                       CheckSafeBlock(block, initial_vars, dialect_funs, observer));
  if (modes != ModeSet{Mode::kRegular}) {
    return Fail(ErrorKind::kModeViolation,
                "top-level block may end with " + modes.ToString());
  }
  return Ok{};
}

Result<FunTable, StaticError> FunTableOf(const Block& block) {
  FunTable funs;
  YUL_RETURN_IF_ERROR(Checker::AddHoisted(block, funs));
  return funs;
}

}  // namespace yul
