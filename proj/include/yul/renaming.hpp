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

// The Disambiguator pass as checkable relations: consistent renaming of
// variables, consistent renaming of functions, and global uniqueness of
// both kinds of names. Also a reference renamer producing outputs the
// relation accepts, and the lifting of variable renaming to run-time
// states, environments and outcomes.

#ifndef YUL_RENAMING_HPP_
#define YUL_RENAMING_HPP_

#include <string>
#include <utility>
#include <vector>

#include "yul/ast.hpp"
#include "yul/dynamics.hpp"
#include "yul/result.hpp"
#include "yul/statics.hpp"

namespace yul {

// Injective association list: old names and new names are each pairwise
// distinct. Lookups take the first matching key.
class Renaming {
 public:
  using Pair = std::pair<Identifier, Identifier>;

  Renaming() = default;
  // Callers must ensure injectivity; see AddVarToRenaming.
  explicit Renaming(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {}

  static Renaming Identity(const VarTable& names);

  const std::vector<Pair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  const Identifier* Lookup(const Identifier& old_name) const;
  bool HasKey(const Identifier& old_name) const;
  bool HasValue(const Identifier& new_name) const;
  bool IsInjective() const;

  VarTable Keys() const;
  VarTable Values() const;
  Renaming Inverted() const;

  friend bool operator==(const Renaming&, const Renaming&) = default;

 private:
  std::vector<Pair> pairs_;
};

struct RenameError {
  enum class Kind {
    kShapeMismatch,
    kUnmappedName,
    kInjectivityViolation,
    kArityMismatch,
    kLiteralMismatch,
    kNotUnique,
  };

  Kind kind;
  std::string context;

  std::string ToString() const;
};

std::string_view ToString(RenameError::Kind kind);

template <typename T>
using RenameResult = Result<T, RenameError>;

RenameResult<Renaming> AddVarToRenaming(const Renaming& ren,
                                        const Identifier& old_name,
                                        const Identifier& new_name);

// Variable renaming with function names held fixed. Statement forms return
// the renaming extended with the pairs the statement declares at its own
// level.
RenameResult<Renaming> StatementRenameVar(const Statement& old_stmt,
                                          const Statement& new_stmt,
                                          const Renaming& ren);
Status<RenameError> ExpressionRenameVar(const Expression& old_expr,
                                        const Expression& new_expr,
                                        const Renaming& ren);
Status<RenameError> BlockRenameVar(const Block& old_block,
                                   const Block& new_block, const Renaming& ren);
// Parameters and results are paired positionally into a fresh renaming.
Status<RenameError> FunDefRenameVar(const FunDef& old_def, const FunDef& new_def);

// Function renaming with variable names held fixed. Each block extends the
// renaming with the pairs of its own definitions before its statements are
// checked.
RenameResult<Renaming> StatementRenameFun(const Statement& old_stmt,
                                          const Statement& new_stmt,
                                          const Renaming& ren);
Status<RenameError> BlockRenameFun(const Block& old_block,
                                   const Block& new_block, const Renaming& ren);

// No variable (respectively function) is declared twice anywhere.
bool UniqueVars(const Block& block);
bool UniqueFuns(const Block& block);

// Every pair each namespace's renaming established, in traversal order.
// Names declared in disjoint scopes may appear more than once as keys.
struct DisambiguationCertificate {
  std::vector<Renaming::Pair> variables;
  std::vector<Renaming::Pair> functions;
};

// Both renamings are checked jointly in one traversal, since each single
// relation holds the other namespace fixed.
RenameResult<DisambiguationCertificate> CheckDisambiguation(const Block& old_block,
                                                            const Block& new_block);

enum class DisambiguateNames { kVariables, kFunctions, kBoth };

// Keeps the first declaration of each name and gives later ones the
// smallest numeric suffix not used anywhere in the program.
Block ReferenceDisambiguate(const Block& block,
                            DisambiguateNames which = DisambiguateNames::kBoth);
// As above, for a block with free variables: each pair (x, y) of
// `free_variables` renames the free variable x to y.
Block ReferenceDisambiguate(const Block& block, DisambiguateNames which,
                            const Renaming& free_variables);

// Domains are exactly the keys and values of `ren`, with equal values
// across each pair.
bool CStateRenameVar(const CState& old_c, const CState& new_c, const Renaming& ren);
// Same scopes, names and bodies related by FunDefRenameVar.
bool FunEnvRenameVar(const FunEnv& old_e, const FunEnv& new_e);
bool SOutcomeRenameVar(const SOutcome& old_o, const SOutcome& new_o,
                       const Renaming& ren);
// Related outcomes, or errors on both sides.
bool SOutcomeResultRenameVar(const StmtResult& old_r, const StmtResult& new_r,
                             const Renaming& ren);

}  // namespace yul

#endif  // YUL_RENAMING_HPP_
