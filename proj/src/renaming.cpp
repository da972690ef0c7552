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

#include "yul/renaming.hpp"

#include <map>
#include <set>

#include "yul/visit.hpp"

namespace yul {
namespace {

using Kind = RenameError::Kind;

Unexpected<RenameError> Fail(Kind kind, std::string context) {
  return Unexpected{RenameError{kind, std::move(context)}};
}

std::string Pair(const std::string& a, const std::string& b) {
  return "'" + a + "' vs '" + b + "'";
}

// One traversal relating old and new code. Each namespace is either
// renamed through its renaming or required to be identical.
class Relater {
 public:
  Relater(bool rename_vars, bool rename_funs)
      : rename_vars_(rename_vars), rename_funs_(rename_funs) {}

  std::vector<Renaming::Pair> var_log;
  std::vector<Renaming::Pair> fun_log;

  Status<RenameError> Expr(const Expression& o, const Expression& n,
                           const Renaming& vr, const Renaming& fr) {
    if (o.node.index() != n.node.index()) {
      return Fail(Kind::kShapeMismatch, Pair(Print(o), Print(n)));
    }
    return Visit(
        o.node,
        [&](const Path& p) { return PathRef(p, std::get<Path>(n.node), vr); },
        [&](const Literal& l) -> Status<RenameError> {
          if (l != std::get<Literal>(n.node)) {
            return Fail(Kind::kLiteralMismatch, Pair(Print(o), Print(n)));
          }
          return Ok{};
        },
        [&](const FunCall& c) { return Call(c, std::get<FunCall>(n.node), vr, fr); });
  }

  RenameResult<Renaming> Stmt(const Statement& o, const Statement& n,
                              const Renaming& vr, const Renaming& fr) {
    using R = RenameResult<Renaming>;
    if (o.node.index() != n.node.index()) {
      return Fail(Kind::kShapeMismatch, Pair(Print(o), Print(n)));
    }
    return Visit(
        o.node,
        [&](const Block& b) -> R {
          YUL_RETURN_IF_ERROR(BlockRel(b, std::get<Block>(n.node), vr, fr));
          return vr;
        },
        [&](const VariableSingle& v) -> R {
          const auto& w = std::get<VariableSingle>(n.node);
          if (v.init.has_value() != w.init.has_value()) {
            return Fail(Kind::kShapeMismatch, Pair(Print(o), Print(n)));
          }
          if (v.init) YUL_RETURN_IF_ERROR(Expr(*v.init, *w.init, vr, fr));
          return Declare(vr, {v.name}, {w.name});
        },
        [&](const VariableMulti& v) -> R {
          const auto& w = std::get<VariableMulti>(n.node);
          if (v.names.size() != w.names.size() ||
              v.init.has_value() != w.init.has_value()) {
            return Fail(Kind::kShapeMismatch, Pair(Print(o), Print(n)));
          }
          if (v.init) YUL_RETURN_IF_ERROR(Call(*v.init, *w.init, vr, fr));
          return Declare(vr, v.names, w.names);
        },
        [&](const AssignSingle& a) -> R {
          const auto& b = std::get<AssignSingle>(n.node);
          YUL_RETURN_IF_ERROR(PathRef(a.target, b.target, vr));
          YUL_RETURN_IF_ERROR(Expr(a.value, b.value, vr, fr));
          return vr;
        },
        [&](const AssignMulti& a) -> R {
          const auto& b = std::get<AssignMulti>(n.node);
          if (a.targets.size() != b.targets.size()) {
            return Fail(Kind::kShapeMismatch, Pair(Print(o), Print(n)));
          }
          for (std::size_t i = 0; i < a.targets.size(); ++i) {
            YUL_RETURN_IF_ERROR(PathRef(a.targets[i], b.targets[i], vr));
          }
          YUL_RETURN_IF_ERROR(Call(a.value, b.value, vr, fr));
          return vr;
        },
        [&](const FunCallStatement& c) -> R {
          YUL_RETURN_IF_ERROR(Call(c.call, std::get<FunCallStatement>(n.node).call, vr, fr));
          return vr;
        },
        [&](const If& i) -> R {
          const auto& j = std::get<If>(n.node);
          YUL_RETURN_IF_ERROR(Expr(i.test, j.test, vr, fr));
          YUL_RETURN_IF_ERROR(BlockRel(i.body, j.body, vr, fr));
          return vr;
        },
        [&](const Switch& s) -> R {
          const auto& t = std::get<Switch>(n.node);
          if (s.cases.size() != t.cases.size() ||
              s.default_block.has_value() != t.default_block.has_value()) {
            return Fail(Kind::kShapeMismatch, "switch with different cases");
          }
          YUL_RETURN_IF_ERROR(Expr(s.target, t.target, vr, fr));
          for (std::size_t i = 0; i < s.cases.size(); ++i) {
            if (s.cases[i].value != t.cases[i].value) {
              return Fail(Kind::kLiteralMismatch,
                          Pair(Print(s.cases[i].value), Print(t.cases[i].value)));
            }
            YUL_RETURN_IF_ERROR(BlockRel(s.cases[i].body, t.cases[i].body, vr, fr));
          }
          if (s.default_block) {
            YUL_RETURN_IF_ERROR(BlockRel(*s.default_block, *t.default_block, vr, fr));
          }
          return vr;
        },
        [&](const For& l) -> R {
          const auto& m = std::get<For>(n.node);
          if (l.init.statements.size() != m.init.statements.size()) {
            return Fail(Kind::kShapeMismatch, "loop initializers differ in length");
          }
          // Initializer declarations scope over the rest of the loop.
          YUL_ASSIGN_OR_RETURN(Renaming lfr, EnterFuns(l.init, m.init, fr));
          Renaming lvr = vr;
          for (std::size_t i = 0; i < l.init.statements.size(); ++i) {
            YUL_ASSIGN_OR_RETURN(lvr, Stmt(l.init.statements[i], m.init.statements[i],
                                           lvr, lfr));
          }
          YUL_RETURN_IF_ERROR(Expr(l.test, m.test, lvr, lfr));
          YUL_RETURN_IF_ERROR(BlockRel(l.update, m.update, lvr, lfr));
          YUL_RETURN_IF_ERROR(BlockRel(l.body, m.body, lvr, lfr));
          return vr;
        },
        [&](const Break&) -> R { return vr; },
        [&](const Continue&) -> R { return vr; },
        [&](const Leave&) -> R { return vr; },
        [&](const FunDef& d) -> R {
          const auto& e = std::get<FunDef>(n.node);
          YUL_RETURN_IF_ERROR(FunRef(d.name, e.name, fr));
          YUL_RETURN_IF_ERROR(FunDefRel(d, e, vr, fr));
          return vr;
        });
  }

  Status<RenameError> BlockRel(const Block& o, const Block& n,
                               const Renaming& vr, const Renaming& fr) {
    if (o.statements.size() != n.statements.size()) {
      return Fail(Kind::kShapeMismatch,
                  "blocks of " + std::to_string(o.statements.size()) + " and " +
                      std::to_string(n.statements.size()) + " statements");
    }
    YUL_ASSIGN_OR_RETURN(Renaming inner_fr, EnterFuns(o, n, fr));
    Renaming inner_vr = vr;
    for (std::size_t i = 0; i < o.statements.size(); ++i) {
      YUL_ASSIGN_OR_RETURN(inner_vr,
                           Stmt(o.statements[i], n.statements[i], inner_vr, inner_fr));
    }
    return Ok{};
  }

  // Bodies see only their own parameters and results.
  Status<RenameError> FunDefRel(const FunDef& o, const FunDef& n,
                                const Renaming& /*outer_vr*/, const Renaming& fr) {
    if (o.inputs.size() != n.inputs.size() || o.outputs.size() != n.outputs.size()) {
      return Fail(Kind::kArityMismatch, "signatures of " + Pair(o.name.name, n.name.name));
    }
    std::vector<Identifier> old_params = o.inputs;
    old_params.insert(old_params.end(), o.outputs.begin(), o.outputs.end());
    std::vector<Identifier> new_params = n.inputs;
    new_params.insert(new_params.end(), n.outputs.begin(), n.outputs.end());
    YUL_ASSIGN_OR_RETURN(Renaming body_vr, Declare(Renaming{}, old_params, new_params));
    return BlockRel(o.body, n.body, body_vr, fr);
  }

  // Pairs up the definitions a block hoists, in order.
  RenameResult<Renaming> EnterFuns(const Block& o, const Block& n, const Renaming& fr) {
    if (!rename_funs_) return fr;
    std::vector<const FunDef*> od = HoistedFunDefs(o);
    std::vector<const FunDef*> nd = HoistedFunDefs(n);
    if (od.size() != nd.size()) {
      return Fail(Kind::kShapeMismatch, "blocks define different numbers of functions");
    }
    Renaming out = fr;
    for (std::size_t i = 0; i < od.size(); ++i) {
      YUL_ASSIGN_OR_RETURN(out, AddVarToRenaming(out, od[i]->name, nd[i]->name));
      fun_log.emplace_back(od[i]->name, nd[i]->name);
    }
    return out;
  }

 private:
  RenameResult<Renaming> Declare(const Renaming& vr,
                                 const std::vector<Identifier>& olds,
                                 const std::vector<Identifier>& news) {
    if (!rename_vars_) {
      for (std::size_t i = 0; i < olds.size(); ++i) {
        if (olds[i] != news[i]) {
          return Fail(Kind::kShapeMismatch,
                      "variable " + Pair(olds[i].name, news[i].name));
        }
      }
      return vr;
    }
    Renaming out = vr;
    for (std::size_t i = 0; i < olds.size(); ++i) {
      YUL_ASSIGN_OR_RETURN(out, AddVarToRenaming(out, olds[i], news[i]));
      var_log.emplace_back(olds[i], news[i]);
    }
    return out;
  }

  Status<RenameError> PathRef(const Path& o, const Path& n, const Renaming& vr) {
    if (o.parts.size() != n.parts.size()) {
      return Fail(Kind::kShapeMismatch, "paths of different lengths");
    }
    if (!rename_vars_ || o.parts.size() != 1) {
      if (o != n) return Fail(Kind::kShapeMismatch, "paths differ");
      return Ok{};
    }
    const Identifier* mapped = vr.Lookup(o.parts.front());
    if (mapped == nullptr) {
      return Fail(Kind::kUnmappedName, "variable '" + o.parts.front().name + "'");
    }
    if (*mapped != n.parts.front()) {
      return Fail(Kind::kUnmappedName,
                  "variable " + Pair(o.parts.front().name, n.parts.front().name) +
                      ", expected '" + mapped->name + "'");
    }
    return Ok{};
  }

  // Names outside the renaming (builtins) must be unchanged and must not
  // collide with a renamed function.
  Status<RenameError> FunRef(const Identifier& o, const Identifier& n,
                             const Renaming& fr) {
    if (!rename_funs_) {
      if (o != n) return Fail(Kind::kShapeMismatch, "function " + Pair(o.name, n.name));
      return Ok{};
    }
    const Identifier* mapped = fr.Lookup(o);
    if (mapped == nullptr) {
      if (o != n || fr.HasValue(n)) {
        return Fail(Kind::kUnmappedName, "function " + Pair(o.name, n.name));
      }
      return Ok{};
    }
    if (*mapped != n) {
      return Fail(Kind::kUnmappedName, "function " + Pair(o.name, n.name) +
                                           ", expected '" + mapped->name + "'");
    }
    return Ok{};
  }

  Status<RenameError> Call(const FunCall& o, const FunCall& n, const Renaming& vr,
                           const Renaming& fr) {
    YUL_RETURN_IF_ERROR(FunRef(o.name, n.name, fr));
    if (o.args.size() != n.args.size()) {
      return Fail(Kind::kArityMismatch, "calls of " + Pair(o.name.name, n.name.name));
    }
    for (std::size_t i = 0; i < o.args.size(); ++i) {
      YUL_RETURN_IF_ERROR(Expr(o.args[i], n.args[i], vr, fr));
    }
    return Ok{};
  }

  bool rename_vars_;
  bool rename_funs_;
};

// Declarations in traversal order; `on_var`/`on_fun` return false to stop.
template <typename V, typename F>
bool WalkDeclarations(const Block& block, V&& on_var, F&& on_fun);

template <typename V, typename F>
bool WalkDeclarations(const Statement& s, V&& on_var, F&& on_fun) {
  return Visit(
      s.node, [&](const Block& b) { return WalkDeclarations(b, on_var, on_fun); },
      [&](const VariableSingle& v) { return on_var(v.name); },
      [&](const VariableMulti& v) {
        for (const Identifier& n : v.names) {
          if (!on_var(n)) return false;
        }
        return true;
      },
      [&](const If& i) { return WalkDeclarations(i.body, on_var, on_fun); },
      [&](const Switch& sw) {
        for (const SwitchCase& c : sw.cases) {
          if (!WalkDeclarations(c.body, on_var, on_fun)) return false;
        }
        return !sw.default_block || WalkDeclarations(*sw.default_block, on_var, on_fun);
      },
      [&](const For& l) {
        return WalkDeclarations(l.init, on_var, on_fun) &&
               WalkDeclarations(l.update, on_var, on_fun) &&
               WalkDeclarations(l.body, on_var, on_fun);
      },
      [&](const FunDef& d) {
        if (!on_fun(d.name)) return false;
        for (const auto* list : {&d.inputs, &d.outputs}) {
          for (const Identifier& n : *list) {
            if (!on_var(n)) return false;
          }
        }
        return WalkDeclarations(d.body, on_var, on_fun);
      },
      [](const auto&) { return true; });
}

template <typename V, typename F>
bool WalkDeclarations(const Block& block, V&& on_var, F&& on_fun) {
  for (const Statement& s : block.statements) {
    if (!WalkDeclarations(s, on_var, on_fun)) return false;
  }
  return true;
}

// Every identifier occurring in the program, declared or referenced.
void CollectAllNames(const Block& block, std::set<std::string>& out);

void CollectAllNames(const Expression& e, std::set<std::string>& out) {
  Visit(
      e.node,
      [&](const Path& p) {
        for (const Identifier& id : p.parts) out.insert(id.name);
      },
      [](const Literal&) {},
      [&](const FunCall& c) {
        out.insert(c.name.name);
        for (const Expression& a : c.args) CollectAllNames(a, out);
      });
}

void CollectAllNames(const Statement& s, std::set<std::string>& out) {
  auto path = [&](const Path& p) {
    for (const Identifier& id : p.parts) out.insert(id.name);
  };
  auto call = [&](const FunCall& c) { CollectAllNames(Expression{c}, out); };
  Visit(
      s.node, [&](const Block& b) { CollectAllNames(b, out); },
      [&](const VariableSingle& v) {
        out.insert(v.name.name);
        if (v.init) CollectAllNames(*v.init, out);
      },
      [&](const VariableMulti& v) {
        for (const Identifier& n : v.names) out.insert(n.name);
        if (v.init) call(*v.init);
      },
      [&](const AssignSingle& a) {
        path(a.target);
        CollectAllNames(a.value, out);
      },
      [&](const AssignMulti& a) {
        for (const Path& p : a.targets) path(p);
        call(a.value);
      },
      [&](const FunCallStatement& c) { call(c.call); },
      [&](const If& i) {
        CollectAllNames(i.test, out);
        CollectAllNames(i.body, out);
      },
      [&](const Switch& sw) {
        CollectAllNames(sw.target, out);
        for (const SwitchCase& c : sw.cases) CollectAllNames(c.body, out);
        if (sw.default_block) CollectAllNames(*sw.default_block, out);
      },
      [&](const For& l) {
        CollectAllNames(l.init, out);
        CollectAllNames(l.test, out);
        CollectAllNames(l.update, out);
        CollectAllNames(l.body, out);
      },
      [&](const FunDef& d) {
        out.insert(d.name.name);
        for (const Identifier& n : d.inputs) out.insert(n.name);
        for (const Identifier& n : d.outputs) out.insert(n.name);
        CollectAllNames(d.body, out);
      },
      [](const auto&) {});
}

void CollectAllNames(const Block& block, std::set<std::string>& out) {
  for (const Statement& s : block.statements) CollectAllNames(s, out);
}

class Disambiguator {
 public:
  Disambiguator(const Block& program, DisambiguateNames which)
      : vars_(which != DisambiguateNames::kFunctions),
        funs_(which != DisambiguateNames::kVariables) {
    CollectAllNames(program, used_);
  }

  using Scope = std::map<Identifier, Identifier>;

  // A free variable: its old and new names are both taken.
  void Reserve(const Identifier& from, const Identifier& to) {
    used_.insert(from.name);
    used_.insert(to.name);
    claimed_vars_.insert(from);
    claimed_vars_.insert(to);
  }

  Block Run(const Block& block, const Scope& vs, const Scope& fs) {
    Scope inner_fs = fs;
    for (const FunDef* def : HoistedFunDefs(block)) {
      inner_fs[def->name] = funs_ ? Fresh(def->name, claimed_funs_) : def->name;
    }
    Scope inner_vs = vs;
    Block out;
    for (const Statement& s : block.statements) {
      out.statements.push_back(Stmt(s, inner_vs, inner_fs));
    }
    return out;
  }

 private:
  Identifier Fresh(const Identifier& name, std::set<Identifier>& claimed) {
    if (claimed.insert(name).second) return name;
    for (std::size_t k = 1;; ++k) {
      std::string candidate = name.name + std::to_string(k);
      if (used_.insert(candidate).second) {
        claimed.insert(Identifier(candidate));
        return Identifier(candidate);
      }
    }
  }

  Identifier DeclareVar(const Identifier& name, Scope& vs) {
    Identifier fresh = vars_ ? Fresh(name, claimed_vars_) : name;
    vs[name] = fresh;
    return fresh;
  }

  static Identifier Lookup(const Identifier& name, const Scope& scope) {
    auto it = scope.find(name);
    return it == scope.end() ? name : it->second;
  }

  Path MapPath(const Path& p, const Scope& vs) {
    if (p.parts.size() != 1) return p;
    return Path{{Lookup(p.parts.front(), vs)}};
  }

  FunCall MapCall(const FunCall& c, const Scope& vs, const Scope& fs) {
    FunCall out{Lookup(c.name, fs), {}};
    for (const Expression& a : c.args) out.args.push_back(Expr(a, vs, fs));
    return out;
  }

  Expression Expr(const Expression& e, const Scope& vs, const Scope& fs) {
    return Visit(
        e.node, [&](const Path& p) { return Expression{MapPath(p, vs)}; },
        [&](const Literal&) { return e; },
        [&](const FunCall& c) { return Expression{MapCall(c, vs, fs)}; });
  }

  Statement Stmt(const Statement& s, Scope& vs, const Scope& fs) {
    return Visit(
        s.node, [&](const Block& b) { return Statement{Run(b, vs, fs)}; },
        [&](const VariableSingle& v) {
          std::optional<Expression> init;
          if (v.init) init = Expr(*v.init, vs, fs);
          return Statement{VariableSingle{DeclareVar(v.name, vs), std::move(init)}};
        },
        [&](const VariableMulti& v) {
          std::optional<FunCall> init;
          if (v.init) init = MapCall(*v.init, vs, fs);
          std::vector<Identifier> names;
          for (const Identifier& n : v.names) names.push_back(DeclareVar(n, vs));
          return Statement{VariableMulti{std::move(names), std::move(init)}};
        },
        [&](const AssignSingle& a) {
          return Statement{AssignSingle{MapPath(a.target, vs), Expr(a.value, vs, fs)}};
        },
        [&](const AssignMulti& a) {
          std::vector<Path> targets;
          for (const Path& p : a.targets) targets.push_back(MapPath(p, vs));
          return Statement{AssignMulti{std::move(targets), MapCall(a.value, vs, fs)}};
        },
        [&](const FunCallStatement& c) {
          return Statement{FunCallStatement{MapCall(c.call, vs, fs)}};
        },
        [&](const If& i) { return Statement{If{Expr(i.test, vs, fs), Run(i.body, vs, fs)}}; },
        [&](const Switch& sw) {
          Switch out{Expr(sw.target, vs, fs), {}, std::nullopt};
          for (const SwitchCase& c : sw.cases) out.cases.push_back({c.value, Run(c.body, vs, fs)});
          if (sw.default_block) out.default_block = Run(*sw.default_block, vs, fs);
          return Statement{std::move(out)};
        },
        [&](const For& l) {
          Scope loop_fs = fs;
          for (const FunDef* def : HoistedFunDefs(l.init)) {
            loop_fs[def->name] = funs_ ? Fresh(def->name, claimed_funs_) : def->name;
          }
          Scope loop_vs = vs;
          Block init;
          for (const Statement& st : l.init.statements) {
            init.statements.push_back(Stmt(st, loop_vs, loop_fs));
          }
          Expression test = Expr(l.test, loop_vs, loop_fs);
          Block update = Run(l.update, loop_vs, loop_fs);
          Block body = Run(l.body, loop_vs, loop_fs);
          return Statement{For{std::move(init), std::move(test), std::move(update),
                               std::move(body)}};
        },
        [&](const FunDef& d) {
          Scope body_vs;
          std::vector<Identifier> inputs, outputs;
          for (const Identifier& n : d.inputs) inputs.push_back(DeclareVar(n, body_vs));
          for (const Identifier& n : d.outputs) outputs.push_back(DeclareVar(n, body_vs));
          return Statement{FunDef{Lookup(d.name, fs), std::move(inputs), std::move(outputs),
                                  Run(d.body, body_vs, fs)}};
        },
        [&](const auto&) { return s; });
  }

  bool vars_;
  bool funs_;
  std::set<std::string> used_;
  std::set<Identifier> claimed_vars_;
  std::set<Identifier> claimed_funs_;
};

}  // namespace

Renaming Renaming::Identity(const VarTable& names) {
  std::vector<Pair> pairs;
  for (const Identifier& n : names) pairs.emplace_back(n, n);
  return Renaming(std::move(pairs));
}

const Identifier* Renaming::Lookup(const Identifier& old_name) const {
  for (const Pair& p : pairs_) {
    if (p.first == old_name) return &p.second;
  }
  return nullptr;
}

bool Renaming::HasKey(const Identifier& old_name) const {
  return Lookup(old_name) != nullptr;
}

bool Renaming::HasValue(const Identifier& new_name) const {
  for (const Pair& p : pairs_) {
    if (p.second == new_name) return true;
  }
  return false;
}

bool Renaming::IsInjective() const {
  return Keys().size() == pairs_.size() && Values().size() == pairs_.size();
}

VarTable Renaming::Keys() const {
  VarTable out;
  for (const Pair& p : pairs_) out.insert(p.first);
  return out;
}

VarTable Renaming::Values() const {
  VarTable out;
  for (const Pair& p : pairs_) out.insert(p.second);
  return out;
}

Renaming Renaming::Inverted() const {
  std::vector<Pair> out;
  for (const Pair& p : pairs_) out.emplace_back(p.second, p.first);
  return Renaming(std::move(out));
}

std::string_view ToString(RenameError::Kind kind) {
  switch (kind) {
    case Kind::kShapeMismatch: return "shape-mismatch";
    case Kind::kUnmappedName: return "unmapped-name";
    case Kind::kInjectivityViolation: return "injectivity-violation";
    case Kind::kArityMismatch: return "arity-mismatch";
    case Kind::kLiteralMismatch: return "literal-mismatch";
    case Kind::kNotUnique: return "not-unique";
  }
  return "?";
}

std::string RenameError::ToString() const {
  return std::string(yul::ToString(kind)) + ": " + context;
}

RenameResult<Renaming> AddVarToRenaming(const Renaming& ren,
                                        const Identifier& old_name,
                                        const Identifier& new_name) {
  if (ren.HasKey(old_name)) {
    return Fail(Kind::kInjectivityViolation, "'" + old_name.name + "' already renamed");
  }
  if (ren.HasValue(new_name)) {
    return Fail(Kind::kInjectivityViolation, "'" + new_name.name + "' already a target");
  }
  std::vector<Renaming::Pair> pairs = ren.pairs();
  pairs.emplace_back(old_name, new_name);
  return Renaming(std::move(pairs));
}

RenameResult<Renaming> StatementRenameVar(const Statement& old_stmt,
                                          const Statement& new_stmt,
                                          const Renaming& ren) {
  return Relater(true, false).Stmt(old_stmt, new_stmt, ren, Renaming{});
}

Status<RenameError> ExpressionRenameVar(const Expression& old_expr,
                                        const Expression& new_expr,
                                        const Renaming& ren) {
  return Relater(true, false).Expr(old_expr, new_expr, ren, Renaming{});
}

Status<RenameError> BlockRenameVar(const Block& old_block, const Block& new_block,
                                   const Renaming& ren) {
  return Relater(true, false).BlockRel(old_block, new_block, ren, Renaming{});
}

Status<RenameError> FunDefRenameVar(const FunDef& old_def, const FunDef& new_def) {
  if (old_def.name != new_def.name) {
    return Fail(Kind::kShapeMismatch, "function " + Pair(old_def.name.name, new_def.name.name));
  }
  return Relater(true, false).FunDefRel(old_def, new_def, Renaming{}, Renaming{});
}

RenameResult<Renaming> StatementRenameFun(const Statement& old_stmt,
                                          const Statement& new_stmt,
                                          const Renaming& ren) {
  YUL_RETURN_IF_ERROR(Relater(false, true).Stmt(old_stmt, new_stmt, Renaming{}, ren));
  return ren;
}

Status<RenameError> BlockRenameFun(const Block& old_block, const Block& new_block,
                                   const Renaming& ren) {
  return Relater(false, true).BlockRel(old_block, new_block, Renaming{}, ren);
}

bool UniqueVars(const Block& block) {
  std::set<Identifier> seen;
  return WalkDeclarations(
      block, [&](const Identifier& n) { return seen.insert(n).second; },
      [](const Identifier&) { return true; });
}

bool UniqueFuns(const Block& block) {
  std::set<Identifier> seen;
  return WalkDeclarations(
      block, [](const Identifier&) { return true; },
      [&](const Identifier& n) { return seen.insert(n).second; });
}

RenameResult<DisambiguationCertificate> CheckDisambiguation(const Block& old_block,
                                                            const Block& new_block) {
  Relater relater(true, true);
  YUL_RETURN_IF_ERROR(relater.BlockRel(old_block, new_block, Renaming{}, Renaming{}));
  if (!UniqueVars(new_block)) {
    return Fail(Kind::kNotUnique, "new code declares a variable name twice");
  }
  if (!UniqueFuns(new_block)) {
    return Fail(Kind::kNotUnique, "new code defines a function name twice");
  }
  return DisambiguationCertificate{std::move(relater.var_log), std::move(relater.fun_log)};
}

Block ReferenceDisambiguate(const Block& block, DisambiguateNames which) {
  return ReferenceDisambiguate(block, which, Renaming{});
}

Block ReferenceDisambiguate(const Block& block, DisambiguateNames which,
                            const Renaming& free_variables) {
  Disambiguator d(block, which);
  Disambiguator::Scope vars;
  for (const auto& [from, to] : free_variables.pairs()) {
    d.Reserve(from, to);
    vars[from] = to;
  }
  return d.Run(block, vars, {});
}

bool CStateRenameVar(const CState& old_c, const CState& new_c, const Renaming& ren) {
  if (old_c.local.size() != ren.pairs().size() || new_c.local.size() != ren.pairs().size()) {
    return false;
  }
  for (const auto& [x, y] : ren.pairs()) {
    auto a = old_c.local.find(x);
    auto b = new_c.local.find(y);
    if (a == old_c.local.end() || b == new_c.local.end() || a->second != b->second) {
      return false;
    }
  }
  return true;
}

bool FunEnvRenameVar(const FunEnv& old_e, const FunEnv& new_e) {
  if (old_e.scopes.size() != new_e.scopes.size()) return false;
  for (std::size_t i = 0; i < old_e.scopes.size(); ++i) {
    const FunScope& a = *old_e.scopes[i];
    const FunScope& b = *new_e.scopes[i];
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      FunDef da{ia->first, ia->second.inputs, ia->second.outputs, *ia->second.body};
      FunDef db{ib->first, ib->second.inputs, ib->second.outputs, *ib->second.body};
      if (!FunDefRenameVar(da, db)) return false;
    }
  }
  return true;
}

bool SOutcomeRenameVar(const SOutcome& old_o, const SOutcome& new_o,
                       const Renaming& ren) {
  return old_o.mode == new_o.mode && CStateRenameVar(old_o.cstate, new_o.cstate, ren);
}

bool SOutcomeResultRenameVar(const StmtResult& old_r, const StmtResult& new_r,
                             const Renaming& ren) {
  if (!old_r.has_value() || !new_r.has_value()) {
    return !old_r.has_value() && !new_r.has_value();
  }
  return SOutcomeRenameVar(*old_r, *new_r, ren);
}

}  // namespace yul
