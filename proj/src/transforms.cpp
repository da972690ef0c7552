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

#include "yul/transforms.hpp"

#include <memory>
#include <utility>

#include "yul/visit.hpp"

namespace yul {
namespace {

// Rebuilds a statement with every nested block passed through `f`.
template <typename F>
Statement MapBlocks(const Statement& stmt, F&& f) {
  return Visit(
      stmt.node, [&](const Block& b) { return Statement{f(b)}; },
      [&](const If& i) { return Statement{If{i.test, f(i.body)}}; },
      [&](const Switch& sw) {
        Switch out{sw.target, {}, std::nullopt};
        for (const SwitchCase& c : sw.cases) out.cases.push_back({c.value, f(c.body)});
        if (sw.default_block) out.default_block = f(*sw.default_block);
        return Statement{std::move(out)};
      },
      [&](const For& l) {
        return Statement{For{f(l.init), l.test, f(l.update), f(l.body)}};
      },
      [&](const FunDef& d) {
        return Statement{FunDef{d.name, d.inputs, d.outputs, f(d.body)}};
      },
      [&](const auto&) { return stmt; });
}

// True iff `pred` holds for the statement and every statement nested in it.
template <typename P>
bool AllStatements(const Statement& stmt, P&& pred);

template <typename P>
bool AllStatements(const Block& block, P&& pred) {
  for (const Statement& s : block.statements) {
    if (!AllStatements(s, pred)) return false;
  }
  return true;
}

template <typename P>
bool AllStatements(const Statement& stmt, P&& pred) {
  if (!pred(stmt)) return false;
  return Visit(
      stmt.node, [&](const Block& b) { return AllStatements(b, pred); },
      [&](const If& i) { return AllStatements(i.body, pred); },
      [&](const Switch& sw) {
        for (const SwitchCase& c : sw.cases) {
          if (!AllStatements(c.body, pred)) return false;
        }
        return !sw.default_block || AllStatements(*sw.default_block, pred);
      },
      [&](const For& l) {
        return AllStatements(l.init, pred) && AllStatements(l.update, pred) &&
               AllStatements(l.body, pred);
      },
      [&](const FunDef& d) { return AllStatements(d.body, pred); },
      [](const auto&) { return true; });
}

bool IsTerminator(const Statement& s) {
  return Holds<Break>(s) || Holds<Continue>(s) || Holds<Leave>(s);
}

template <typename F>
FunEnv MapBodies(const FunEnv& env, F&& f) {
  FunEnv out;
  for (const auto& scope : env.scopes) {
    FunScope mapped;
    for (const auto& [name, info] : *scope) {
      mapped.emplace(name, FunInfo{info.inputs, info.outputs,
                                   std::make_shared<const Block>(f(*info.body))});
    }
    out.Push(std::move(mapped));
  }
  return out;
}

template <typename P>
bool AllBodies(const FunEnv& env, P&& pred) {
  for (const auto& scope : env.scopes) {
    for (const auto& [name, info] : *scope) {
      if (!pred(*info.body)) return false;
    }
  }
  return true;
}

}  // namespace

Block ForLoopInitRewrite(const Block& block) {
  Block out;
  out.statements.reserve(block.statements.size());
  for (const Statement& s : block.statements) out.statements.push_back(ForLoopInitRewrite(s));
  return out;
}

Statement ForLoopInitRewrite(const Statement& stmt) {
  Statement mapped = MapBlocks(stmt, [](const Block& b) { return ForLoopInitRewrite(b); });
  auto* loop = std::get_if<For>(&mapped.node);
  if (loop == nullptr || loop->init.statements.empty()) return mapped;
  Block wrapper{std::move(loop->init.statements)};
  wrapper.statements.push_back(Statement{
      For{Block{}, std::move(loop->test), std::move(loop->update), std::move(loop->body)}});
  return Statement{std::move(wrapper)};
}

Block DeadCodeEliminate(const Block& block) {
  Block out;
  for (const Statement& s : block.statements) {
    out.statements.push_back(StatementDead(s));
    if (IsTerminator(s)) break;
  }
  return out;
}

Statement StatementDead(const Statement& stmt) {
  return MapBlocks(stmt, [](const Block& b) { return DeadCodeEliminate(b); });
}

bool NoFun(const Block& block) {
  return AllStatements(block, [](const Statement& s) { return !Holds<FunDef>(s); });
}

bool NoFun(const Statement& stmt) {
  return AllStatements(stmt, [](const Statement& s) { return !Holds<FunDef>(s); });
}

namespace {
bool EmptyInit(const Statement& s) {
  const For* loop = As<For>(s);
  return loop == nullptr || loop->init.statements.empty();
}
}  // namespace

bool NoLoopInit(const Block& block) { return AllStatements(block, EmptyInit); }
bool NoLoopInit(const Statement& stmt) { return AllStatements(stmt, EmptyInit); }

FunEnv FunEnvDead(const FunEnv& funenv) {
  return MapBodies(funenv, [](const Block& b) { return DeadCodeEliminate(b); });
}

FunEnv FunEnvLoopInitRewrite(const FunEnv& funenv) {
  return MapBodies(funenv, [](const Block& b) { return ForLoopInitRewrite(b); });
}

bool FunEnvNoFun(const FunEnv& funenv) {
  return AllBodies(funenv, [](const Block& b) { return NoFun(b); });
}

bool FunEnvNoLoopInit(const FunEnv& funenv) {
  return AllBodies(funenv, [](const Block& b) { return NoLoopInit(b); });
}

}  // namespace yul
