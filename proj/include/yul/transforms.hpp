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

// The ForLoopInitRewriter and DeadCodeEliminator passes, and the syntactic
// restrictions under which their correctness is stated.

#ifndef YUL_TRANSFORMS_HPP_
#define YUL_TRANSFORMS_HPP_

#include "yul/ast.hpp"
#include "yul/dynamics.hpp"

namespace yul {

// `for { I } T { U } { B }` with nonempty I becomes
// `{ I for { } T { U } { B } }`, bottom-up.
Block ForLoopInitRewrite(const Block& block);
Statement ForLoopInitRewrite(const Statement& stmt);

// Drops everything after the first break, continue or leave of every block.
Block DeadCodeEliminate(const Block& block);
Statement StatementDead(const Statement& stmt);

// No function definitions anywhere.
bool NoFun(const Block& block);
bool NoFun(const Statement& stmt);

// Every loop has an empty initializer.
bool NoLoopInit(const Block& block);
bool NoLoopInit(const Statement& stmt);

// The passes and restrictions lifted to the bodies of an environment.
FunEnv FunEnvDead(const FunEnv& funenv);
FunEnv FunEnvLoopInitRewrite(const FunEnv& funenv);
bool FunEnvNoFun(const FunEnv& funenv);
bool FunEnvNoLoopInit(const FunEnv& funenv);

}  // namespace yul

#endif  // YUL_TRANSFORMS_HPP_
