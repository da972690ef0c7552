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

#include <omp.h>

#include <algorithm>
#include <exception>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "yul/dynamics.hpp"
#include "yul/literal.hpp"
#include "yul/renaming.hpp"
#include "yul/statics.hpp"
#include "yul/syntax.hpp"
#include "yul/testgen.hpp"
#include "yul/transforms.hpp"

namespace yul {
namespace {

constexpr std::size_t kMaxFailuresPerCase = 3;

// Collects the failures of one case.
class Sink {
 public:
  Sink(std::uint64_t seed, std::string* log) : seed_(seed), log_(log) {}

  void SetProgram(const Block& program) {
    program_ = PrintPretty(program);
    Log("program:\n" + program_);
  }

  void Fail(std::string property, std::string detail) {
    if (log_ != nullptr) *log_ += "FAIL " + property + ": " + detail + "\n";
    if (failures_.size() < kMaxFailuresPerCase) {
      failures_.push_back({seed_, program_, std::move(property), std::move(detail)});
    }
  }

  void Log(const std::string& line) {
    if (log_ != nullptr) *log_ += line + "\n";
  }
  bool verbose() const { return log_ != nullptr; }

  std::vector<SuiteFailure> Take() { return std::move(failures_); }

 private:
  std::uint64_t seed_;
  std::string* log_;
  std::string program_;
  std::vector<SuiteFailure> failures_;
};

const Dialect& Evm() {
  static const Dialect kDialect = Dialect::EvmPure();
  return kDialect;
}

FunTable BuiltinTable(const GenConfig& cfg) {
  FunTable table;
  for (const Identifier& name : cfg.builtin_set) {
    if (const Builtin* b = Evm().Find(name)) table.emplace(name, b->type);
  }
  return table;
}

std::string Describe(const StmtResult& r) {
  if (!r) return r.error().ToString();
  std::string out = "mode=" + std::string(ToString(r->mode));
  for (const auto& [name, value] : r->cstate.local) out += " " + name.name + "=" + ToDecimal(value);
  return out;
}

Value RandomValue(Rng& rng) {
  switch (rng.Below(4)) {
    case 0: return Value(rng.Below(4));
    case 1: return Value(rng.Below(300));
    case 2: return ~Value(rng.Below(3));
    default: {
      Value v = 0;
      for (int i = 0; i < 4; ++i) v = (v << 64) | Value(rng.Next());
      return v;
    }
  }
}

CState RandomState(const std::vector<Identifier>& vars, Rng& rng) {
  CState c;
  for (const Identifier& v : vars) c.local[v] = RandomValue(rng);
  return c;
}

std::vector<Identifier> FreeVars(std::size_t n, const char* prefix) {
  std::vector<Identifier> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(prefix + std::to_string(i));
  return out;
}

VarTable ToTable(const std::vector<Identifier>& vars) { return VarTable(vars.begin(), vars.end()); }

FunTable Merge(FunTable a, const FunTable& b) {
  for (const auto& [k, v] : b) a[k] = v;
  return a;
}

// The statements of a block other than function definitions.
Block WithoutFunDefs(const Block& block) {
  Block out;
  for (const Statement& s : block.statements) {
    if (!Holds<FunDef>(s)) out.statements.push_back(s);
  }
  return out;
}

FunEnv TopEnv(const Block& block) {
  FunEnv env;
  env.Push(ScopeOf(block));
  return env;
}

// ---------------------------------------------------------------------------
// static-soundness

// Re-derives the static judgment for every construct the interpreter runs,
// in the run-time context, and compares it with what actually happened.
class SoundnessObserver : public ExecObserver, public StaticObserver {
 public:
  SoundnessObserver(Sink& sink, FunTable builtins)
      : sink_(sink), builtins_(std::move(builtins)) {}

  void OnBlock(const Block& block, const FunTable& funs) override {
    static_tables_[&block] = funs;
  }

  void OnBlockEntry(const Block& block, const FunEnv& env) override {
    auto it = static_tables_.find(&block);
    if (it == static_tables_.end()) {
      Fail("funtable", "block entered at run time was never checked: " + Print(block));
      return;
    }
    if (Merge(builtins_, FunEnvToFunTable(env)) != it->second) {
      Fail("funtable", "run-time environment differs from static table at " + Print(block));
    }
  }

  void OnStatement(const Statement& stmt, const CState& before, const FunEnv& env,
                   const StmtResult& result) override {
    if (!result) {
      if (!result.error().IsLimit()) Fail("no-safety-error", result.error().ToString() + " in " + Print(stmt));
      return;
    }
    const auto& st = Check(stmt, CStateToVars(before), Merge(builtins_, FunEnvToFunTable(env)));
    if (!st) {
      Fail("context-safe", st.error().ToString() + " for " + Print(stmt));
      return;
    }
    if (!st->modes.Contains(result->mode)) {
      Fail("mode-membership", std::string(ToString(result->mode)) + " not in " +
                                  st->modes.ToString() + " for " + Print(stmt));
    }
    if (CStateToVars(result->cstate) != st->vars) {
      Fail("vars-abstraction", "run-time variables differ from static table after " + Print(stmt));
    }
  }

  void OnExpression(const Expression& expr, const CState& before, const FunEnv& env,
                    const ExprResult& result) override {
    if (!result) {
      if (!result.error().IsLimit()) Fail("no-safety-error", result.error().ToString() + " in " + Print(expr));
      return;
    }
    auto count = CheckSafeExpression(expr, CStateToVars(before),
                                     Merge(builtins_, FunEnvToFunTable(env)));
    if (!count) {
      Fail("context-safe", count.error().ToString() + " for " + Print(expr));
    } else if (*count != result->values.size()) {
      Fail("value-count", Print(expr) + " yielded " + std::to_string(result->values.size()) +
                              " values, statically " + std::to_string(*count));
    }
    if (result->cstate != before) Fail("expression-purity", Print(expr) + " changed the state");
  }

 private:
  void Fail(std::string property, std::string detail) {
    if (failed_++ < kMaxFailuresPerCase) sink_.Fail(std::move(property), std::move(detail));
  }

  // Loops re-run the same statements; the judgment only depends on the
  // statement and its tables.
  const Result<VarsModes, StaticError>& Check(const Statement& stmt, VarTable vars, FunTable funs) {
    auto it = cache_.find(&stmt);
    if (it != cache_.end() && it->second.vars == vars && it->second.funs == funs) {
      return it->second.result;
    }
    auto result = CheckSafeStatement(stmt, vars, funs);
    Entry& e = cache_.insert_or_assign(&stmt, Entry{std::move(vars), std::move(funs), std::move(result)})
                   .first->second;
    return e.result;
  }

  struct Entry {
    VarTable vars;
    FunTable funs;
    Result<VarsModes, StaticError> result;
  };

  Sink& sink_;
  FunTable builtins_;
  std::unordered_map<const Block*, FunTable> static_tables_;
  std::unordered_map<const Statement*, Entry> cache_;
  std::size_t failed_ = 0;
};

void StaticSoundnessCase(std::uint64_t seed, const SuiteOptions& opt, Sink& sink) {
  GenConfig cfg = opt.gen;
  cfg.seed = seed;
  cfg.free_variables = FreeVars(2, "p");
  Block program = GenProgram(cfg, Evm());
  sink.SetProgram(program);
  Rng rng(SplitMix64(seed));
  CState initial = RandomState(cfg.free_variables, rng);
  FunTable builtins = BuiltinTable(cfg);
  std::vector<std::uint64_t> fuels = opt.fuels.empty() ? std::vector<std::uint64_t>{4, 64, 4096} : opt.fuels;
  for (std::uint64_t fuel : fuels) {
    SoundnessObserver observer(sink, builtins);
    auto safe = CheckSafeTop(program, builtins, ToTable(cfg.free_variables), &observer);
    if (!safe) {
      sink.Fail("generator-safe", safe.error().ToString());
      return;
    }
    ExecOptions exec;
    exec.observer = &observer;
    exec.skip_output_zeroing = opt.mutate_skip_output_zeroing;
    StmtResult r = ExecTop(program, initial, Evm(), fuel, exec);
    sink.Log("fuel " + std::to_string(fuel) + ": " + Describe(r));
    if (!r && !r.error().IsLimit()) sink.Fail("no-safety-error", r.error().ToString());
  }
}

// ---------------------------------------------------------------------------
// generator

void GeneratorCase(std::uint64_t seed, const SuiteOptions& opt, Sink& sink) {
  GenConfig cfg = opt.gen;
  cfg.seed = seed;
  Block program = GenProgram(cfg, Evm());
  sink.SetProgram(program);
  auto safe = CheckSafeTop(program, BuiltinTable(cfg), ToTable(cfg.free_variables));
  if (!safe) sink.Fail("generator-safe", safe.error().ToString());
  if (!(GenProgram(cfg, Evm()) == program)) sink.Fail("generator-deterministic", "second run differs");
  if (!cfg.allow_fundefs && !NoFun(program)) sink.Fail("generator-nofun", "definition generated");
  if (!cfg.allow_loop_init && !NoLoopInit(program)) {
    sink.Fail("generator-noloopinit", "loop initializer generated");
  }
}

// ---------------------------------------------------------------------------
// dead-code

void DeadCodeInto(const Block& program, const std::vector<Identifier>& free_vars,
                  const std::vector<std::uint64_t>& fuels, std::uint64_t seed, Sink& sink) {
  FunEnv env = TopEnv(program);
  FunEnv env_dead = FunEnvDead(env);
  Statement stmt{WithoutFunDefs(program)};
  Statement dead = StatementDead(stmt);
  FunTable funs = Merge(Evm().Table(), FunEnvToFunTable(env));
  VarTable vars = ToTable(free_vars);
  const bool nofun = NoFun(stmt) && FunEnvNoFun(env);
  const bool noloopinit = NoLoopInit(stmt) && FunEnvNoLoopInit(env);
  sink.Log(std::string("nofun=") + (nofun ? "yes" : "no") + " noloopinit=" + (noloopinit ? "yes" : "no"));
  const std::string tag = noloopinit ? "" : " (loop initializers present)";

  auto old_st = CheckSafeStatement(stmt, vars, funs);
  if (!old_st) {
    sink.Fail("precondition-safe", old_st.error().ToString());
    return;
  }
  auto new_st = CheckSafeStatement(dead, vars, funs);
  if (!new_st) {
    sink.Fail("static-preservation" + tag, "transformed code unsafe: " + new_st.error().ToString());
  } else {
    if (new_st->vars != old_st->vars) sink.Fail("static-preservation" + tag, "variable tables differ");
    if (!new_st->modes.SubsetOf(old_st->modes)) {
      sink.Fail("static-preservation" + tag, "modes " + new_st->modes.ToString() + " not within " +
                                                 old_st->modes.ToString());
    }
  }
  for (const auto& scope : env.scopes) {
    for (const auto& [name, info] : *scope) {
      VarTable params(info.inputs.begin(), info.inputs.end());
      params.insert(info.outputs.begin(), info.outputs.end());
      auto a = CheckSafeBlock(*info.body, params, funs);
      auto b = CheckSafeBlock(DeadCodeEliminate(*info.body), params, funs);
      if (a && (!b || !b->SubsetOf(*a))) {
        sink.Fail("static-preservation" + tag, "body of " + name.name);
      }
    }
  }

  Rng rng(SplitMix64(seed ^ 0xdeadc0deULL));
  CState initial = RandomState(free_vars, rng);
  for (std::uint64_t fuel : fuels) {
    StmtResult a = ExecStatement(stmt, initial, env, Evm(), fuel);
    StmtResult b = ExecStatement(dead, initial, env_dead, Evm(), fuel);
    sink.Log("fuel " + std::to_string(fuel) + ": " + Describe(a) + " | " + Describe(b));
    if (!OkEq(a, b)) {
      sink.Fail(nofun ? "dynamic-okeq" : "dynamic-okeq (nofun dropped)",
                "fuel " + std::to_string(fuel) + ": " + Describe(a) + " vs " + Describe(b));
    }
  }
}

void DeadCodeCase(std::uint64_t seed, const SuiteOptions& opt, Sink& sink) {
  GenConfig cfg = opt.gen;
  cfg.seed = seed;
  cfg.free_variables = FreeVars(2, "p");
  cfg.allow_fundefs = true;
  cfg.top_level_fundefs_only = !opt.drop_nofun;
  cfg.allow_loop_init = opt.allow_loop_init;
  Block program = GenProgram(cfg, Evm());
  sink.SetProgram(program);
  std::vector<std::uint64_t> fuels = opt.fuels.empty() ? std::vector<std::uint64_t>{4, 64, 4096} : opt.fuels;
  DeadCodeInto(program, cfg.free_variables, fuels, seed, sink);
}

// ---------------------------------------------------------------------------
// loop-init

void LoopInitCase(std::uint64_t seed, const SuiteOptions& opt, Sink& sink) {
  GenConfig cfg = opt.gen;
  cfg.seed = seed;
  cfg.free_variables = FreeVars(2, "p");
  cfg.allow_loop_init = true;
  Block program = GenProgram(cfg, Evm());
  sink.SetProgram(program);
  Block rewritten = ForLoopInitRewrite(program);
  FunTable builtins = BuiltinTable(cfg);
  VarTable vars = ToTable(cfg.free_variables);

  auto safe = CheckSafeTop(rewritten, builtins, vars);
  if (!safe) sink.Fail("static-preservation", "rewritten program unsafe: " + safe.error().ToString());
  // Statement by statement along the top block. A loop whose initializer
  // cannot finish regularly loses `regular` from its mode set once wrapped;
  // every other difference is a failure.
  auto top_funs = FunTableOf(program);
  FunTable funs = Merge(builtins, top_funs ? *top_funs : FunTable{});
  for (std::size_t i = 0; i < program.statements.size(); ++i) {
    auto a = CheckSafeStatement(program.statements[i], vars, funs);
    auto b = CheckSafeStatement(rewritten.statements[i], vars, funs);
    if (!a) break;
    if (!b) {
      sink.Fail("static-preservation", "statement " + std::to_string(i) + ": " + b.error().ToString());
      break;
    }
    if (a->vars != b->vars) sink.Fail("static-preservation", "variable tables differ at statement " + std::to_string(i));
    if (!b->modes.SubsetOf(a->modes) || !a->modes.Without(Mode::kRegular).SubsetOf(b->modes)) {
      sink.Fail("mode-sets", a->modes.ToString() + " vs " + b->modes.ToString() + " at statement " +
                                 std::to_string(i));
    }
    vars = a->vars;
  }

  Rng rng(SplitMix64(seed ^ 0x100b1417ULL));
  CState initial = RandomState(cfg.free_variables, rng);
  std::vector<std::uint64_t> fuels = opt.fuels.empty() ? std::vector<std::uint64_t>{4, 64, 4096} : opt.fuels;
  FunEnv env = TopEnv(program);
  FunEnv env_rw = FunEnvLoopInitRewrite(env);
  Statement body{WithoutFunDefs(program)};
  Statement body_rw = ForLoopInitRewrite(body);
  for (std::uint64_t fuel : fuels) {
    StmtResult a = ExecTop(program, initial, Evm(), fuel);
    StmtResult b = ExecTop(rewritten, initial, Evm(), fuel);
    sink.Log("fuel " + std::to_string(fuel) + ": " + Describe(a) + " | " + Describe(b));
    if (!OkEq(a, b)) {
      sink.Fail("dynamic-okeq", "fuel " + std::to_string(fuel) + ": " + Describe(a) + " vs " + Describe(b));
    }
    StmtResult c = ExecStatement(body, initial, env, Evm(), fuel);
    StmtResult d = ExecStatement(body_rw, initial, env_rw, Evm(), fuel);
    if (!OkEq(c, d)) {
      sink.Fail("dynamic-okeq-env", "fuel " + std::to_string(fuel) + ": " + Describe(c) + " vs " + Describe(d));
    }
  }
}

// ---------------------------------------------------------------------------
// renamevar

void RenameVarCase(std::uint64_t seed, const SuiteOptions& opt, Sink& sink) {
  GenConfig cfg = opt.gen;
  cfg.seed = seed;
  cfg.free_variables = FreeVars(3, "p");
  cfg.allow_fundefs = true;
  cfg.top_level_fundefs_only = true;
  Block old_prog = GenProgram(cfg, Evm());
  sink.SetProgram(old_prog);

  std::vector<Renaming::Pair> initial_pairs;
  for (std::size_t i = 0; i < cfg.free_variables.size(); ++i) {
    initial_pairs.emplace_back(cfg.free_variables[i], Identifier("r" + std::to_string(i)));
  }
  Renaming ren0(initial_pairs);
  Block new_prog = ReferenceDisambiguate(old_prog, DisambiguateNames::kVariables, ren0);
  if (sink.verbose()) sink.Log("renamed:\n" + PrintPretty(new_prog));

  FunEnv old_env = TopEnv(old_prog);
  FunEnv new_env = TopEnv(new_prog);
  if (!FunEnvRenameVar(old_env, new_env)) sink.Fail("funenv-renamevar", "environments not related");
  FunTable funs = Merge(Evm().Table(), FunEnvToFunTable(old_env));

  Block old_body = WithoutFunDefs(old_prog);
  Block new_body = WithoutFunDefs(new_prog);
  if (old_body.statements.size() != new_body.statements.size()) {
    sink.Fail("relation-accepts", "renamer changed the program shape");
    return;
  }

  // Static side, threading the renaming along the top-level statements.
  std::vector<Renaming> rens{ren0};
  for (std::size_t i = 0; i < old_body.statements.size(); ++i) {
    const Statement& o = old_body.statements[i];
    const Statement& n = new_body.statements[i];
    const Renaming& ren = rens.back();
    auto next = StatementRenameVar(o, n, ren);
    if (!next) {
      sink.Fail("relation-accepts", "statement " + std::to_string(i) + ": " + next.error().ToString());
      return;
    }
    auto inverse = StatementRenameVar(n, o, ren.Inverted());
    if (!inverse || !(*inverse == next->Inverted())) {
      sink.Fail("relation-symmetry", "statement " + std::to_string(i));
    }
    auto refl = StatementRenameVar(o, o, Renaming::Identity(ren.Keys()));
    if (!refl) sink.Fail("relation-reflexive", refl.error().ToString());
    auto so = CheckSafeStatement(o, ren.Keys(), funs);
    auto sn = CheckSafeStatement(n, ren.Values(), funs);
    if (!so) {
      sink.Fail("precondition-safe", so.error().ToString());
      return;
    }
    if (!sn) {
      sink.Fail("static-preservation", "renamed statement unsafe: " + sn.error().ToString());
    } else {
      if (so->vars != next->Keys() || sn->vars != next->Values()) {
        sink.Fail("static-preservation", "variable tables are not the renaming's keys and values");
      }
      if (so->modes != sn->modes) {
        sink.Fail("static-preservation", "modes " + so->modes.ToString() + " vs " + sn->modes.ToString());
      }
    }
    rens.push_back(std::move(*next));
  }

  // Dynamic side from related random states.
  Rng rng(SplitMix64(seed ^ 0x2e4a3e00ULL));
  std::vector<std::uint64_t> fuels = opt.fuels.empty() ? std::vector<std::uint64_t>{4096} : opt.fuels;
  for (int k = 0; k < opt.states_per_program; ++k) {
    CState c_old;
    CState c_new;
    for (const auto& [x, y] : ren0.pairs()) {
      Value v = RandomValue(rng);
      c_old.local[x] = v;
      c_new.local[y] = v;
    }
    for (std::uint64_t fuel : fuels) {
      CState a = c_old;
      CState b = c_new;
      for (std::size_t i = 0; i < old_body.statements.size(); ++i) {
        StmtResult ra = ExecStatement(old_body.statements[i], a, old_env, Evm(), fuel);
        StmtResult rb = ExecStatement(new_body.statements[i], b, new_env, Evm(), fuel);
        if ((!ra && !ra.error().IsLimit()) || (!rb && !rb.error().IsLimit())) {
          sink.Fail("no-safety-error", Describe(ra) + " | " + Describe(rb));
          break;
        }
        if (!SOutcomeResultRenameVar(ra, rb, rens[i + 1])) {
          sink.Fail("dynamic-renamevar", "statement " + std::to_string(i) + " fuel " +
                                             std::to_string(fuel) + ": " + Describe(ra) + " vs " + Describe(rb));
          break;
        }
        if (!ra || ra->mode != Mode::kRegular) break;
        a = std::move(ra->cstate);
        b = std::move(rb->cstate);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// restrictions

void RestrictionsCase(std::uint64_t seed, const SuiteOptions& opt, Sink& sink) {
  GenConfig cfg = opt.gen;
  cfg.seed = seed;
  // Alternate the restrictions so both sides of each implication occur.
  cfg.allow_fundefs = (seed & 1) != 0;
  cfg.allow_loop_init = (seed & 2) != 0;
  Block program = GenProgram(cfg, Evm());
  sink.SetProgram(program);
  Block dead = DeadCodeEliminate(program);
  Block rewritten = ForLoopInitRewrite(program);
  if (NoFun(program) && !NoFun(dead)) sink.Fail("dead-preserves-nofun", "");
  if (NoLoopInit(program) && !NoLoopInit(dead)) sink.Fail("dead-preserves-noloopinit", "");
  if (!NoLoopInit(rewritten)) sink.Fail("rewrite-establishes-noloopinit", "");
  if (!(DeadCodeEliminate(dead) == dead)) sink.Fail("dead-idempotent", "");
  if (!(ForLoopInitRewrite(rewritten) == rewritten)) sink.Fail("rewrite-idempotent", "");
  if (NoFun(program) != NoFun(rewritten)) sink.Fail("rewrite-preserves-nofun", "");
  FunEnv env = TopEnv(program);
  if (FunEnvNoFun(env) && !FunEnvNoFun(FunEnvDead(env))) sink.Fail("funenv-dead-preserves-nofun", "");
  if (!FunEnvNoLoopInit(FunEnvLoopInitRewrite(env))) sink.Fail("funenv-rewrite-noloopinit", "");
}

// ---------------------------------------------------------------------------
// roundtrip

std::vector<Token> Relex(const std::vector<Token>& tokens) {
  std::string joined;
  for (const Token& t : tokens) joined += t.lexeme + " ";
  auto again = Lex(joined);
  return again ? *again : std::vector<Token>{};
}

void RoundtripCase(std::uint64_t seed, const SuiteOptions& opt, Sink& sink) {
  GenConfig cfg = opt.gen;
  cfg.seed = seed;
  Block program = GenProgram(cfg, Evm());
  sink.SetProgram(program);
  std::string text = Print(program);
  auto parsed = ParseProgram(text);
  if (!parsed) {
    sink.Fail("parse-print", parsed.error().ToString());
  } else if (!(*parsed == program)) {
    sink.Fail("parse-print", "reparsed tree differs");
  }
  auto pretty = ParseProgram(PrintPretty(program));
  if (!pretty || !(*pretty == program)) sink.Fail("parse-print-pretty", "reparsed tree differs");
  auto tokens = Lex(text);
  if (!tokens) {
    sink.Fail("lex", tokens.error().ToString());
  } else if (Relex(*tokens) != *tokens) {
    sink.Fail("relex", "tokens differ after relexing");
  }
  DeclaredNames a = CollectDeclaredNames(program);
  if (parsed) {
    DeclaredNames b = CollectDeclaredNames(*parsed);
    if (a.variables != b.variables || a.functions != b.functions) sink.Fail("declared-names", "");
  }
}

// ---------------------------------------------------------------------------
// fuel-monotonicity

void FuelCase(std::uint64_t seed, const SuiteOptions& opt, Sink& sink) {
  GenConfig cfg = opt.gen;
  cfg.seed = seed;
  cfg.free_variables = FreeVars(2, "p");
  Block program = GenProgram(cfg, Evm());
  sink.SetProgram(program);
  Rng rng(SplitMix64(seed ^ 0xf0e1ULL));
  CState initial = RandomState(cfg.free_variables, rng);
  std::vector<std::uint64_t> fuels = opt.fuels;
  if (fuels.empty()) {
    for (int k = 2; k <= 14; ++k) fuels.push_back(std::uint64_t{1} << k);
  }
  std::sort(fuels.begin(), fuels.end());
  std::optional<SOutcome> first;
  std::uint64_t first_fuel = 0;
  for (std::uint64_t fuel : fuels) {
    StmtResult r = ExecTop(program, initial, Evm(), fuel);
    sink.Log("fuel " + std::to_string(fuel) + ": " + Describe(r));
    if (!r) {
      if (!r.error().IsLimit()) sink.Fail("no-safety-error", r.error().ToString());
      if (first) {
        sink.Fail("monotone", "limit at " + std::to_string(fuel) + " after success at " +
                                  std::to_string(first_fuel));
      }
      continue;
    }
    if (!first) {
      first = *r;
      first_fuel = fuel;
    } else if (!(*r == *first)) {
      sink.Fail("monotone", "result at " + std::to_string(fuel) + " differs from result at " +
                                std::to_string(first_fuel));
    }
  }
}

// ---------------------------------------------------------------------------
// disambiguate

void DisambiguateCase(std::uint64_t seed, const SuiteOptions& opt, Sink& sink) {
  GenConfig cfg = opt.gen;
  cfg.seed = seed;
  Block program = GenProgram(cfg, Evm());
  sink.SetProgram(program);
  Block renamed = ReferenceDisambiguate(program);
  auto cert = CheckDisambiguation(program, renamed);
  if (!cert) sink.Fail("relation-accepts", cert.error().ToString());
  if (!UniqueVars(renamed) || !UniqueFuns(renamed)) sink.Fail("unique-names", "");
  auto safe = CheckSafeTop(renamed, BuiltinTable(cfg), ToTable(cfg.free_variables));
  if (!safe) sink.Fail("renamed-safe", safe.error().ToString());
  if (!(ReferenceDisambiguate(renamed) == renamed)) sink.Fail("renamer-idempotent", "");
}

// ---------------------------------------------------------------------------
// literal-agreement

void LiteralCase(std::uint64_t seed, const SuiteOptions&, Sink& sink) {
  Rng rng(seed);
  for (int k = 0; k < 20; ++k) {
    Literal lit = GenLiteral(rng);
    bool st = CheckSafeLiteral(lit).has_value();
    for (StringAlignment a : {StringAlignment::kBase256, StringAlignment::kLeftAlign32}) {
      if (st != LiteralValue(lit, a).has_value()) {
        sink.Fail("literal-agreement", Print(lit) + (st ? " accepted" : " rejected") + " statically only");
      }
    }
    auto tokens = Lex(Print(lit));
    if (!tokens || tokens->size() != 1) {
      sink.Fail("literal-print", Print(lit));
      continue;
    }
    const Token& t = tokens->front();
    const auto* back = std::get_if<Literal>(&t.value);
    const auto* kw = std::get_if<Keyword>(&t.value);
    bool same = back != nullptr ? *back == lit
                                : kw != nullptr && MakeBool(*kw == Keyword::kTrue) == lit;
    if (!same) sink.Fail("literal-print", Print(lit) + " relexes differently");
  }
}

using CaseFn = void (*)(std::uint64_t, const SuiteOptions&, Sink&);

const std::vector<std::pair<std::string, CaseFn>>& Registry() {
  static const std::vector<std::pair<std::string, CaseFn>> kSuites = {
      {"generator", GeneratorCase},
      {"static-soundness", StaticSoundnessCase},
      {"dead-code", DeadCodeCase},
      {"loop-init", LoopInitCase},
      {"renamevar", RenameVarCase},
      {"restrictions", RestrictionsCase},
      {"roundtrip", RoundtripCase},
      {"fuel-monotonicity", FuelCase},
      {"disambiguate", DisambiguateCase},
      {"literal-agreement", LiteralCase},
  };
  return kSuites;
}

CaseFn Find(const std::string& name) {
  for (const auto& [n, fn] : Registry()) {
    if (n == name) return fn;
  }
  return nullptr;
}

std::vector<SuiteFailure> RunCase(CaseFn fn, std::uint64_t case_seed, const SuiteOptions& opt,
                                  std::string* log) {
  Sink sink(case_seed, log);
  try {
    RunWithLargeStack([&] { fn(case_seed, opt, sink); });
  } catch (const std::exception& e) {
    sink.Fail("exception", e.what());
  }
  return sink.Take();
}

// Extra cases some suite configurations add after the generated ones.
void AddExtraCases(const std::string& name, const SuiteOptions& opt,
                   std::vector<SuiteFailure>& failures, std::size_t& cases) {
  if (name == "dead-code" && opt.drop_nofun) {
    Block cex = NofunCounterexample();
    for (SuiteFailure& f : CheckDeadCodeCase(cex, {}, {4, 64, 4096}, 0)) failures.push_back(std::move(f));
    ++cases;
  }
}

SuiteReport Finish(const std::string& name, std::vector<std::vector<SuiteFailure>> per_case,
                   const SuiteOptions& opt) {
  SuiteReport report;
  report.name = name;
  report.cases_run = per_case.size();
  for (auto& fs : per_case) {
    for (SuiteFailure& f : fs) report.failures.push_back(std::move(f));
  }
  AddExtraCases(name, opt, report.failures, report.cases_run);
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const SuiteFailure& a, const SuiteFailure& b) { return a.seed < b.seed; });
  return report;
}

}  // namespace

std::vector<SuiteFailure> CheckDeadCodeCase(const Block& program,
                                            const std::vector<Identifier>& free_variables,
                                            const std::vector<std::uint64_t>& fuels,
                                            std::uint64_t seed) {
  Sink sink(seed, nullptr);
  sink.SetProgram(program);
  DeadCodeInto(program, free_variables, fuels, seed, sink);
  return sink.Take();
}

Block NofunCounterexample() {
  Block body;
  body.statements.push_back(Statement{FunCallStatement{FunCall{Identifier("f"), {}}}});
  body.statements.push_back(Statement{Break{}});
  body.statements.push_back(Statement{FunDef{Identifier("f"), {}, {}, Block{}}});
  Block program;
  program.statements.push_back(
      Statement{For{Block{}, LiteralExpr(MakeDecimal("1")), Block{}, std::move(body)}});
  return program;
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& [n, fn] : Registry()) names.push_back(n);
    return names;
  }();
  return kNames;
}

bool IsSuite(const std::string& name) { return Find(name) != nullptr; }

std::uint64_t CaseSeed(std::uint64_t seed, std::size_t index) {
  return SplitMix64(seed * 0x100000001b3ULL + index);
}

SuiteReport RunSuite(const std::string& name, const SuiteOptions& options) {
  CaseFn fn = Find(name);
  if (fn == nullptr) return SuiteReport{name, 0, {{0, "", "unknown-suite", name}}};
  std::vector<std::vector<SuiteFailure>> per_case(options.n);
  const auto n = static_cast<std::int64_t>(options.n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    auto idx = static_cast<std::size_t>(i);
    per_case[idx] = RunCase(fn, CaseSeed(options.seed, idx), options, nullptr);
  }
  return Finish(name, std::move(per_case), options);
}

SuiteReport RunSuiteSerial(const std::string& name, const SuiteOptions& options) {
  CaseFn fn = Find(name);
  if (fn == nullptr) return SuiteReport{name, 0, {{0, "", "unknown-suite", name}}};
  std::vector<std::vector<SuiteFailure>> per_case;
  per_case.reserve(options.n);
  for (std::size_t i = 0; i < options.n; ++i) {
    per_case.push_back(RunCase(fn, CaseSeed(options.seed, i), options, nullptr));
  }
  return Finish(name, std::move(per_case), options);
}

SuiteReport ReplayCase(const std::string& name, std::uint64_t case_seed,
                       const SuiteOptions& options, std::string* log) {
  CaseFn fn = Find(name);
  if (fn == nullptr) return SuiteReport{name, 0, {{0, "", "unknown-suite", name}}};
  std::string local;
  std::string* out = log != nullptr ? log : &local;
  SuiteReport report;
  report.name = name;
  report.cases_run = 1;
  report.failures = RunCase(fn, case_seed, options, out);
  return report;
}

std::string SuiteReport::ToString(std::size_t max_shown) const {
  std::ostringstream out;
  out << "suite " << name << ": " << cases_run << " cases, " << failures.size() << " failures"
      << (passed() ? " [PASS]" : " [FAIL]") << "\n";
  for (std::size_t i = 0; i < failures.size() && i < max_shown; ++i) {
    const SuiteFailure& f = failures[i];
    out << "  seed " << f.seed << " " << f.property << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
  }
  if (failures.size() > max_shown) out << "  ... " << failures.size() - max_shown << " more\n";
  return out.str();
}

}  // namespace yul
