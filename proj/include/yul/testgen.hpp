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

// Random generation of statically safe programs, and the property suites
// that exercise soundness and transformation-correctness properties on
// them.

#ifndef YUL_TESTGEN_HPP_
#define YUL_TESTGEN_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "yul/ast.hpp"
#include "yul/dialect.hpp"

namespace yul {

enum class Construct {
  kLet,
  kLetMulti,
  kAssign,
  kAssignMulti,
  kCall,
  kIf,
  kSwitch,
  kFor,
  kBlock,
  kFunDef,
  kBreak,
  kContinue,
  kLeave,
};

struct GenConfig {
  std::uint64_t seed = 0;
  int max_depth = 4;
  int max_stmts_per_block = 5;
  bool allow_fundefs = true;
  // Function definitions only directly in the top block, with bodies that
  // define nothing further. Ignored unless allow_fundefs.
  bool top_level_fundefs_only = false;
  bool allow_loops = true;
  bool allow_loop_init = true;
  // Whether function bodies may call functions that are still being
  // generated (which makes unbounded recursion possible).
  bool allow_recursion = false;
  // Probability that a loop is the bounded counter pattern.
  double counter_loop_probability = 0.8;
  // Accessible at the top; the program may read and assign them.
  std::vector<Identifier> free_variables;
  // Subset of the dialect the program may call.
  std::vector<Identifier> builtin_set;
  // Relative frequencies; missing constructs use the defaults.
  std::map<Construct, double> weights;

  // Builtins of Dialect::EvmPure(), default weights.
  static GenConfig Default();
};

// Raw 64-bit generator output; no std distributions, so sequences are the
// same on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t Next() { return engine_(); }
  // Uniform-ish in [0, n). n > 0.
  std::uint64_t Below(std::uint64_t n) { return engine_() % n; }
  bool Chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

// The generated program passes CheckSafeTop with the dialect's table
// restricted to cfg.builtin_set and cfg.free_variables as initial
// variables. Deterministic in cfg.
Block GenProgram(const GenConfig& cfg, const Dialect& dialect);

// Any literal, including ones that are too large.
Literal GenLiteral(Rng& rng);

struct SuiteFailure {
  std::uint64_t seed = 0;
  std::string program;
  std::string property;
  std::string detail;

  friend bool operator==(const SuiteFailure&, const SuiteFailure&) = default;
};

struct SuiteReport {
  std::string name;
  std::size_t cases_run = 0;
  std::vector<SuiteFailure> failures;  // sorted by seed

  bool passed() const { return failures.empty(); }
  std::string ToString(std::size_t max_shown = 5) const;
};

struct SuiteOptions {
  std::size_t n = 100;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> fuels;  // empty: the suite's default
  GenConfig gen = GenConfig::Default();
  // dead-code: generate function definitions anywhere, dropping the
  // no-function-definitions hypothesis. The constructed counterexample is
  // then added as an extra case.
  bool drop_nofun = false;
  // dead-code: allow loop initializers (the static preservation property
  // is stated for loop-free initializers).
  bool allow_loop_init = false;
  // static-soundness: run a deliberately broken interpreter.
  bool mutate_skip_output_zeroing = false;
  // renamevar: related initial states per program.
  int states_per_program = 10;
  // Print each case while running; used by replay.
  bool verbose = false;
};

// Names accepted by RunSuite.
const std::vector<std::string>& SuiteNames();
bool IsSuite(const std::string& name);

// Case i runs with seed CaseSeed(options.seed, i). The parallel and serial
// runners produce identical reports.
std::uint64_t CaseSeed(std::uint64_t seed, std::size_t index);
SuiteReport RunSuite(const std::string& name, const SuiteOptions& options);
SuiteReport RunSuiteSerial(const std::string& name, const SuiteOptions& options);

// Reruns the single case with the given case seed, verbosely into `log`.
SuiteReport ReplayCase(const std::string& name, std::uint64_t case_seed,
                       const SuiteOptions& options, std::string* log);

// The dead-code checks on one constructed program. Top-level definitions of `program` form the environment; its other
// top-level statements, wrapped in a block, are the statement under test.
// `free_variables` get random initial values drawn from `seed`.
std::vector<SuiteFailure> CheckDeadCodeCase(const Block& program,
                                            const std::vector<Identifier>& free_variables,
                                            const std::vector<std::uint64_t>& fuels,
                                            std::uint64_t seed);

// `for { } 1 { } { f() break function f() { } }`: deleting the definition
// after the break leaves the call unresolved.
Block NofunCounterexample();

}  // namespace yul

#endif  // YUL_TESTGEN_HPP_
