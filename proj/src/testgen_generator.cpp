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

#include <algorithm>
#include <set>
#include <string>

#include "yul/literal.hpp"
#include "yul/testgen.hpp"

namespace yul {
namespace {

constexpr const char* kVarPool[] = {"x", "y", "z", "a", "b", "c", "i", "j", "k", "v"};
constexpr const char* kFunPool[] = {"f", "g", "h", "p", "q"};

const std::map<Construct, double>& DefaultWeights() {
  static const std::map<Construct, double> kWeights = {
      {Construct::kLet, 6},    {Construct::kLetMulti, 1.5}, {Construct::kAssign, 5},
      {Construct::kAssignMulti, 1}, {Construct::kCall, 1.5}, {Construct::kIf, 2},
      {Construct::kSwitch, 1.5}, {Construct::kFor, 1.5},    {Construct::kBlock, 1},
      {Construct::kFunDef, 1},  {Construct::kBreak, 1},     {Construct::kContinue, 0.7},
      {Construct::kLeave, 0.7},
  };
  return kWeights;
}

struct Fun {
  Identifier name;
  FunType type;
  bool callable = true;  // body finished, so calling it cannot recurse
};

// Generation context; copied into nested scopes.
struct Ctx {
  std::vector<Identifier> vars;       // accessible
  std::set<Identifier> protected_vars;  // loop counters: never assigned
  std::vector<Fun> funs;              // visible user functions
  bool in_loop = false;               // break/continue allowed
  bool in_function = false;           // leave allowed
  int depth = 0;                      // remaining nesting
};

class Generator {
 public:
  Generator(const GenConfig& cfg, const Dialect& dialect)
      : cfg_(cfg), rng_(cfg.seed) {
    for (const Identifier& name : cfg.builtin_set) {
      if (const Builtin* b = dialect.Find(name)) builtins_.push_back({name, b->type, true});
    }
    weights_ = DefaultWeights();
    for (const auto& [c, w] : cfg.weights) weights_[c] = w;
  }

  Block Program() {
    Ctx ctx;
    ctx.vars = cfg_.free_variables;
    ctx.depth = cfg_.max_depth;
    return GenBlock(ctx, /*top=*/true);
  }

 private:
  // Functions are hoisted, so a block's definitions are created (and their
  // bodies generated) before its other statements.
  Block GenBlock(Ctx ctx, bool top = false) {
    std::vector<Statement> defs;
    if (FunDefsAllowed(top) && ctx.depth > 0) {
      std::size_t count = 0;
      while (count < 3 && rng_.Chance(Weight(Construct::kFunDef) / 4.0)) ++count;
      std::size_t first = ctx.funs.size();
      for (std::size_t k = 0; k < count; ++k) {
        Identifier name = FreshFunName(ctx);
        FunType type{rng_.Below(4), rng_.Below(3)};
        ctx.funs.push_back({name, type, cfg_.allow_recursion});
      }
      for (std::size_t k = first; k < ctx.funs.size(); ++k) {
        defs.push_back(GenFunDef(ctx, k));
        ctx.funs[k].callable = true;
      }
    }
    Block block;
    std::size_t n = rng_.Below(static_cast<std::uint64_t>(cfg_.max_stmts_per_block) + 1);
    for (std::size_t k = 0; k < n; ++k) block.statements.push_back(GenStatement(ctx));
    for (Statement& def : defs) {
      std::size_t pos = rng_.Below(block.statements.size() + 1);
      block.statements.insert(block.statements.begin() + static_cast<std::ptrdiff_t>(pos),
                              std::move(def));
    }
    return block;
  }

  bool FunDefsAllowed(bool top) const {
    return cfg_.allow_fundefs && (top || !cfg_.top_level_fundefs_only);
  }

  Statement GenFunDef(const Ctx& outer, std::size_t index) {
    const Fun& fun = outer.funs[index];
    Ctx body;
    body.funs = outer.funs;
    body.in_function = true;
    body.depth = outer.depth - 1;
    FunDef def;
    def.name = fun.name;
    for (std::size_t i = 0; i < fun.type.inputs; ++i) def.inputs.push_back(FreshVar(body));
    for (std::size_t i = 0; i < fun.type.outputs; ++i) def.outputs.push_back(FreshVar(body));
    def.body = GenBlock(body);
    return Statement{std::move(def)};
  }

  double Weight(Construct c) const {
    auto it = weights_.find(c);
    return it == weights_.end() ? 0.0 : it->second;
  }

  Statement GenStatement(Ctx& ctx) {
    std::vector<std::pair<Construct, double>> options;
    auto offer = [&](Construct c, bool ok) {
      if (ok && Weight(c) > 0) options.emplace_back(c, Weight(c));
    };
    bool nested = ctx.depth > 0;
    offer(Construct::kLet, true);
    offer(Construct::kLetMulti, true);
    offer(Construct::kAssign, !Assignable(ctx).empty());
    offer(Construct::kAssignMulti, CanAssignMulti(ctx));
    offer(Construct::kCall, !Callable(ctx, 0).empty());
    offer(Construct::kIf, nested);
    offer(Construct::kSwitch, nested);
    offer(Construct::kFor, nested && cfg_.allow_loops);
    offer(Construct::kBlock, nested);
    offer(Construct::kBreak, ctx.in_loop);
    offer(Construct::kContinue, ctx.in_loop);
    offer(Construct::kLeave, ctx.in_function);
    double total = 0;
    for (const auto& [c, w] : options) total += w;
    double pick = static_cast<double>(rng_.Next() >> 11) * 0x1.0p-53 * total;
    Construct chosen = options.back().first;
    for (const auto& [c, w] : options) {
      if (pick < w) {
        chosen = c;
        break;
      }
      pick -= w;
    }
    Ctx inner = ctx;
    inner.depth = ctx.depth - 1;
    switch (chosen) {
      case Construct::kLet: {
        std::optional<Expression> init;
        if (rng_.Chance(0.8)) init = GenExpr(ctx, 2);
        Identifier name = FreshVar(ctx);
        return Statement{VariableSingle{std::move(name), std::move(init)}};
      }
      case Construct::kLetMulti: {
        std::size_t count = 2 + rng_.Below(2);
        std::optional<FunCall> init;
        std::vector<const Fun*> fs = Callable(ctx, count);
        if (!fs.empty() && rng_.Chance(0.8)) init = GenCall(ctx, *fs[rng_.Below(fs.size())], 2);
        std::vector<Identifier> names;
        for (std::size_t i = 0; i < count; ++i) names.push_back(FreshVar(ctx));
        return Statement{VariableMulti{std::move(names), std::move(init)}};
      }
      case Construct::kAssign: {
        std::vector<Identifier> targets = Assignable(ctx);
        Identifier target = targets[rng_.Below(targets.size())];
        return Statement{AssignSingle{Path{{target}}, GenExpr(ctx, 2)}};
      }
      case Construct::kAssignMulti: {
        std::vector<Identifier> targets = Assignable(ctx);
        std::vector<const Fun*> fs;
        for (std::size_t m = 2; m <= targets.size(); ++m) {
          for (const Fun* f : Callable(ctx, m)) fs.push_back(f);
        }
        const Fun& f = *fs[rng_.Below(fs.size())];
        std::vector<Path> paths;
        for (std::size_t i = 0; i < f.type.outputs; ++i) {
          std::size_t k = i + rng_.Below(targets.size() - i);
          std::swap(targets[i], targets[k]);
          paths.push_back(Path{{targets[i]}});
        }
        return Statement{AssignMulti{std::move(paths), GenCall(ctx, f, 2)}};
      }
      case Construct::kCall: {
        std::vector<const Fun*> fs = Callable(ctx, 0);
        return Statement{FunCallStatement{GenCall(ctx, *fs[rng_.Below(fs.size())], 2)}};
      }
      case Construct::kIf: {
        Expression test = GenExpr(ctx, 2);
        return Statement{If{std::move(test), GenBlock(inner)}};
      }
      case Construct::kSwitch:
        return GenSwitch(ctx, inner);
      case Construct::kFor:
        return GenFor(ctx, inner);
      case Construct::kBlock:
        return Statement{GenBlock(inner)};
      case Construct::kBreak:
        return Statement{Break{}};
      case Construct::kContinue:
        return Statement{Continue{}};
      case Construct::kLeave:
        return Statement{Leave{}};
      case Construct::kFunDef:
        break;
    }
    return Statement{Block{}};
  }

  Statement GenSwitch(const Ctx& ctx, const Ctx& inner) {
    Switch sw{GenExpr(ctx, 2), {}, std::nullopt};
    std::size_t cases = rng_.Below(4);
    std::vector<Value> seen;
    for (std::size_t k = 0; k < cases; ++k) {
      Literal lit = SmallLiteral(rng_.Below(6));
      Value v = LiteralValue(lit).value();
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
      seen.push_back(v);
      sw.cases.push_back(SwitchCase{std::move(lit), GenBlock(inner)});
    }
    if (sw.cases.empty() || rng_.Chance(0.5)) sw.default_block = GenBlock(inner);
    return Statement{std::move(sw)};
  }

  // Counter loops: `for { let i := 0 } lt(i, K) { i := add(i, 1) } { ... }`,
  // or, without initializers, the same with the counter declared in a
  // wrapping block. The counter is never assigned by the body.
  Statement GenFor(const Ctx& ctx, const Ctx& inner) {
    Ctx loop = inner;
    bool counter = rng_.Chance(cfg_.counter_loop_probability) && Has("lt") && Has("add");
    if (counter) {
      Identifier i = FreshVar(loop);
      loop.protected_vars.insert(i);
      Expression test = CallExpr("lt", {Expression{Path{{i}}}, LiteralExpr(SmallLiteral(1 + rng_.Below(5)))});
      Block update{{Statement{AssignSingle{
          Path{{i}}, CallExpr("add", {Expression{Path{{i}}}, LiteralExpr(MakeDecimal("1"))})}}}};
      Ctx body = loop;
      body.in_loop = true;
      Block body_block = GenBlock(body);
      Statement decl{VariableSingle{i, LiteralExpr(MakeDecimal("0"))}};
      if (cfg_.allow_loop_init) {
        return Statement{For{Block{{std::move(decl)}}, std::move(test), std::move(update),
                             std::move(body_block)}};
      }
      Block wrapper{{std::move(decl)}};
      wrapper.statements.push_back(
          Statement{For{Block{}, std::move(test), std::move(update), std::move(body_block)}});
      return Statement{std::move(wrapper)};
    }
    // Free-form loop; may well run until the fuel is exhausted.
    Block init;
    Ctx after_init = loop;
    if (cfg_.allow_loop_init && rng_.Chance(0.5)) {
      Ctx init_ctx = loop;
      init_ctx.in_loop = false;
      init_ctx.depth = std::min(loop.depth, 1);
      std::size_t n = 1 + rng_.Below(2);
      for (std::size_t k = 0; k < n; ++k) init.statements.push_back(GenStatement(init_ctx));
      // Definitions in an initializer scope over the whole loop.
      if (FunDefsAllowed(false) && rng_.Chance(0.25)) {
        init_ctx.funs.push_back({FreshFunName(init_ctx), FunType{rng_.Below(3), rng_.Below(2)},
                                 cfg_.allow_recursion});
        Statement def = GenFunDef(init_ctx, init_ctx.funs.size() - 1);
        init_ctx.funs.back().callable = true;
        std::size_t pos = rng_.Below(init.statements.size() + 1);
        init.statements.insert(init.statements.begin() + static_cast<std::ptrdiff_t>(pos),
                               std::move(def));
      }
      after_init.vars = init_ctx.vars;
      after_init.funs = init_ctx.funs;
    }
    after_init.in_loop = false;
    Expression test = GenExpr(after_init, 2);
    Block update = GenBlock(after_init);
    Ctx body = after_init;
    body.in_loop = true;
    Block body_block = GenBlock(body);
    return Statement{For{std::move(init), std::move(test), std::move(update),
                         std::move(body_block)}};
  }

  bool Has(const char* builtin) const {
    for (const Fun& f : builtins_) {
      if (f.name.name == builtin) return true;
    }
    return false;
  }

  std::vector<Identifier> Assignable(const Ctx& ctx) const {
    std::vector<Identifier> out;
    for (const Identifier& v : ctx.vars) {
      if (!ctx.protected_vars.contains(v)) out.push_back(v);
    }
    return out;
  }

  bool CanAssignMulti(const Ctx& ctx) const {
    std::size_t n = Assignable(ctx).size();
    for (std::size_t m = 2; m <= n; ++m) {
      if (!Callable(ctx, m).empty()) return true;
    }
    return false;
  }

  std::vector<const Fun*> Callable(const Ctx& ctx, std::size_t outputs) const {
    std::vector<const Fun*> out;
    for (const Fun& f : builtins_) {
      if (f.type.outputs == outputs) out.push_back(&f);
    }
    for (const Fun& f : ctx.funs) {
      if (f.callable && f.type.outputs == outputs) out.push_back(&f);
    }
    return out;
  }

  FunCall GenCall(const Ctx& ctx, const Fun& f, int depth) {
    FunCall call{f.name, {}};
    for (std::size_t i = 0; i < f.type.inputs; ++i) call.args.push_back(GenExpr(ctx, depth - 1));
    return call;
  }

  Expression GenExpr(const Ctx& ctx, int depth) {
    std::uint64_t roll = rng_.Below(10);
    if (depth > 0 && roll < 4) {
      std::vector<const Fun*> fs = Callable(ctx, 1);
      if (!fs.empty()) return Expression{GenCall(ctx, *fs[rng_.Below(fs.size())], depth)};
    }
    if (!ctx.vars.empty() && roll < 8) {
      return Expression{Path{{ctx.vars[rng_.Below(ctx.vars.size())]}}};
    }
    return LiteralExpr(SafeLiteral());
  }

  Literal SmallLiteral(std::uint64_t v) {
    switch (rng_.Below(4)) {
      case 0: return MakeHex(ToHex(Value(v)).substr(2));
      case 1:
        if (v <= 1) return MakeBool(v == 1);
        break;
      default: break;
    }
    return MakeDecimal(std::to_string(v));
  }

  Literal SafeLiteral() {
    for (;;) {
      Literal lit = rng_.Chance(0.7) ? SmallLiteral(rng_.Below(16)) : GenLiteral(rng_);
      if (LiteralValue(lit).has_value()) return lit;
    }
  }

  // Prefers pool names so that names recur across sibling scopes.
  Identifier FreshVar(Ctx& ctx) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      Identifier id(kVarPool[rng_.Below(std::size(kVarPool))]);
      if (std::find(ctx.vars.begin(), ctx.vars.end(), id) == ctx.vars.end()) {
        ctx.vars.push_back(id);
        return id;
      }
    }
    for (std::size_t k = 0;; ++k) {
      Identifier id("v" + std::to_string(k));
      if (std::find(ctx.vars.begin(), ctx.vars.end(), id) == ctx.vars.end()) {
        ctx.vars.push_back(id);
        return id;
      }
    }
  }

  Identifier FreshFunName(const Ctx& ctx) {
    auto taken = [&](const Identifier& id) {
      for (const Fun& f : ctx.funs) {
        if (f.name == id) return true;
      }
      for (const Fun& f : builtins_) {
        if (f.name == id) return true;
      }
      return false;
    };
    for (int attempt = 0; attempt < 4; ++attempt) {
      Identifier id(kFunPool[rng_.Below(std::size(kFunPool))]);
      if (!taken(id)) return id;
    }
    for (std::size_t k = 0;; ++k) {
      Identifier id("fn" + std::to_string(k));
      if (!taken(id)) return id;
    }
  }

  GenConfig cfg_;
  Rng rng_;
  std::vector<Fun> builtins_;
  std::map<Construct, double> weights_;
};

std::string RandomHexDigits(Rng& rng, std::size_t n) {
  static constexpr char kDigits[] = "0123456789abcdefABCDEF";
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += kDigits[rng.Below(22)];
  return out;
}

}  // namespace

GenConfig GenConfig::Default() {
  GenConfig cfg;
  for (const char* name : {"add", "sub", "mul", "div", "mod", "lt", "gt", "eq", "and", "or",
                           "xor", "shl", "shr", "iszero", "not"}) {
    cfg.builtin_set.emplace_back(name);
  }
  return cfg;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Block GenProgram(const GenConfig& cfg, const Dialect& dialect) {
  return Generator(cfg, dialect).Program();
}

// Boundary values are overrepresented.
Literal GenLiteral(Rng& rng) {
  switch (rng.Below(9)) {
    case 0: return MakeBool(rng.Chance(0.5));
    case 1: return MakeDecimal(std::to_string(rng.Below(1000)));
    case 2: {
      static const std::string kNear[] = {
          ToDecimal(~Value(0) - 1), ToDecimal(~Value(0)),
          "115792089237316195423570985008687907853269984665640564039457584007913129639936",
          "115792089237316195423570985008687907853269984665640564039457584007913129639937"};
      return MakeDecimal(kNear[rng.Below(4)]);
    }
    case 3: {
      std::string digits = RandomHexDigits(rng, 1 + rng.Below(70));
      if (rng.Chance(0.3)) digits = std::string(rng.Below(4), '0') + digits;
      return MakeHex(digits);
    }
    case 4: return MakeDecimal(std::to_string(rng.Next()) + std::to_string(rng.Next()));
    case 5: {
      std::size_t n = rng.Below(36);
      std::string bytes;
      for (std::size_t i = 0; i < n; ++i) {
        bytes += rng.Chance(0.8) ? static_cast<char>(' ' + rng.Below(95))
                                 : static_cast<char>(rng.Below(256));
      }
      return MakeString(bytes);
    }
    case 6: {
      // Every element kind.
      PlainString s;
      std::size_t n = rng.Below(36);
      for (std::size_t i = 0; i < n; ++i) {
        switch (rng.Below(4)) {
          case 0: s.elements.push_back(StringElement::Hex(static_cast<unsigned char>(rng.Below(256)))); break;
          case 1: {
            using K = StringElement::Kind;
            static constexpr K kEscapes[] = {K::kBackslash, K::kDoubleQuote, K::kSingleQuote,
                                             K::kNewline, K::kCarriageReturn, K::kTab};
            s.elements.push_back(StringElement::Escape(kEscapes[rng.Below(6)]));
            break;
          }
          default: {
            char c = static_cast<char>('a' + rng.Below(26));
            s.elements.push_back(StringElement::Raw(static_cast<unsigned char>(c)));
          }
        }
      }
      return Literal{std::move(s)};
    }
    case 7: return Literal{HexString{RandomHexDigits(rng, 2 * rng.Below(35))}};
    default: return MakeHex(RandomHexDigits(rng, 1 + rng.Below(8)));
  }
}

}  // namespace yul
