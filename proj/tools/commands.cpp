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

#include "commands.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "yul/dynamics.hpp"
#include "yul/renaming.hpp"
#include "yul/solc_json.hpp"
#include "yul/statics.hpp"
#include "yul/syntax.hpp"
#include "yul/testgen.hpp"
#include "yul/transforms.hpp"

namespace yul::cli {
namespace {

using nlohmann::json;

constexpr const char* kSchema = "yulkit-certificate/1";
constexpr const char* kVerdictNote =
    "Checker verdict for one transformation instance. This is not a proof.";

// Raised for unreadable or unparsable input; becomes exit code 2.
struct InputError {
  std::string message;
};

struct Loaded {
  std::string path;
  std::string format;  // "yul" or "solc-json"
  std::string sha256;
  Block block;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot open"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// A Yul block cannot start with a string, so `{` then `"` means JSON.
bool LooksLikeJson(const std::string& path, const std::string& text) {
  if (EndsWith(path, ".json")) return true;
  if (EndsWith(path, ".yul")) return false;
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos || text[i] != '{') return false;
  std::size_t j = text.find_first_not_of(" \t\r\n", i + 1);
  return j != std::string::npos && text[j] == '"';
}

Loaded Load(const std::string& path, bool allow_json = true) {
  Loaded l;
  l.path = path;
  std::string text = ReadFile(path);
  l.sha256 = Sha256Hex(text);
  if (allow_json && LooksLikeJson(path, text)) {
    l.format = "solc-json";
    auto b = ConvertSolcJsonText(text);
    if (!b) throw InputError{path + ": " + b.error().ToString()};
    l.block = std::move(*b);
  } else {
    l.format = "yul";
    auto b = ParseProgram(text);
    if (!b) throw InputError{path + ":" + b.error().ToString()};
    l.block = std::move(*b);
  }
  return l;
}

Dialect MakeDialect(const std::string& name, bool left_align) {
  const Dialect* d = Dialect::ByName(name);
  if (d == nullptr) throw InputError{"unknown dialect '" + name + "'"};
  Dialect copy = *d;
  if (left_align) copy.set_string_alignment(StringAlignment::kLeftAlign32);
  return copy;
}

std::string ModeName(Mode m) { return std::string(ToString(m)); }

json InputJson(const Loaded& l) {
  return {{"file", l.path}, {"format", l.format}, {"sha256", l.sha256}};
}

json Pairs(const std::vector<Renaming::Pair>& pairs) {
  json arr = json::array();
  for (const auto& [a, b] : pairs) arr.push_back({a.name, b.name});
  return arr;
}

// Variables declared directly at the top of `old_b` paired with their
// counterparts in `new_b`, which has the same shape.
Renaming TopLevelVariables(const Block& old_b, const Block& new_b) {
  std::vector<Renaming::Pair> pairs;
  for (std::size_t i = 0; i < old_b.statements.size() && i < new_b.statements.size(); ++i) {
    const Statement& o = old_b.statements[i];
    const Statement& n = new_b.statements[i];
    if (const auto* a = std::get_if<VariableSingle>(&o.node)) {
      if (const auto* b = std::get_if<VariableSingle>(&n.node)) pairs.emplace_back(a->name, b->name);
    } else if (const auto* a = std::get_if<VariableMulti>(&o.node)) {
      if (const auto* b = std::get_if<VariableMulti>(&n.node)) {
        for (std::size_t k = 0; k < a->names.size() && k < b->names.size(); ++k) {
          pairs.emplace_back(a->names[k], b->names[k]);
        }
      }
    }
  }
  return Renaming(std::move(pairs));
}

std::string Describe(const StmtResult& r) {
  if (!r) return "error=" + r.error().ClassName();
  std::string s = "mode=" + ModeName(r->mode);
  for (const auto& [k, v] : r->cstate.local) s += " " + k.name + "=" + ToDecimal(v);
  return s;
}

// Paired executions of old and new at random fuels. Returns the summary
// object; `mismatches` counts runs violating the outcome relation.
json Differential(const std::string& transform, const Block& old_b, const Block& new_b,
                  int runs, std::uint64_t seed, std::uint64_t max_fuel, const Dialect& dialect) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> fuel_dist(1, max_fuel);
  Renaming top = TopLevelVariables(old_b, new_b);
  int mismatches = 0;
  int both_ok = 0;
  json first;
  for (int i = 0; i < runs; ++i) {
    std::uint64_t fuel = fuel_dist(rng);
    std::optional<StmtResult> ra;
    std::optional<StmtResult> rb;
    RunWithLargeStack([&] {
      ra = ExecTop(old_b, CState{}, dialect, fuel);
      rb = ExecTop(new_b, CState{}, dialect, fuel);
    });
    const StmtResult& a = *ra;
    const StmtResult& b = *rb;
    bool ok = transform == "disambiguate" ? SOutcomeResultRenameVar(a, b, top) : OkEq(a, b);
    if (a && b) ++both_ok;
    if (!ok) {
      if (mismatches == 0) first = {{"fuel", fuel}, {"old", Describe(a)}, {"new", Describe(b)}};
      ++mismatches;
    }
  }
  json j = {{"runs", runs},         {"seed", seed},   {"max_fuel", max_fuel},
            {"both_succeeded", both_ok}, {"mismatches", mismatches},
            {"relation", transform == "disambiguate" ? "soutcome-result-renamevar" : "okeq"}};
  if (mismatches > 0) j["first_mismatch"] = first;
  return j;
}

json Certificate(const std::string& transform, const Loaded& old_l, const Loaded& new_l) {
  return {{"schema", kSchema},
          {"tool", "yulkit"},
          {"tool_version", YULKIT_VERSION},
          {"note", kVerdictNote},
          {"transform", transform},
          {"inputs", {{"old", InputJson(old_l)}, {"new", InputJson(new_l)}}}};
}

void Reject(json& cert, const std::string& error, const std::string& context) {
  cert["result"] = "rejected";
  cert["detail"] = {{"error", error}, {"context", context}};
}

// ---------------------------------------------------------------------------

struct Flags {
  // shared
  std::string dialect = "evm-pure";
  bool left_align = false;
  bool pretty = false;
  std::vector<std::string> files;
  // run / check
  std::uint64_t fuel = std::uint64_t{1} << 20;
  std::vector<std::string> vars;
  // transform / validate
  std::string pass;
  int differential = 0;
  std::uint64_t diff_seed = 1;
  std::uint64_t diff_max_fuel = 4096;
  // suite
  std::string suite;
  std::size_t n = 100;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> fuels;
  std::optional<std::uint64_t> replay;
  bool serial = false;
  bool drop_nofun = false;
  bool allow_loop_init = false;
  bool mutate = false;
  std::size_t max_shown = 5;
};

CState InitialState(const std::vector<std::string>& vars) {
  CState c;
  for (const std::string& spec : vars) {
    std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError{"--var expects name=value, got '" + spec + "'"};
    auto v = ParseValue(spec.substr(eq + 1));
    if (!v) throw InputError{"--var " + spec + ": not a 256-bit value"};
    c.local[Identifier(spec.substr(0, eq))] = *v;
  }
  return c;
}

int CmdParse(const Flags& f, std::ostream& out, std::ostream&) {
  Loaded l = Load(f.files.at(0), false);
  out << (f.pretty ? PrintPretty(l.block) : Print(l.block)) << "\n";
  return kOk;
}

int CmdImportJson(const Flags& f, std::ostream& out, std::ostream&) {
  std::string text = ReadFile(f.files.at(0));
  auto b = ConvertSolcJsonText(text);
  if (!b) throw InputError{f.files.at(0) + ": " + b.error().ToString()};
  out << (f.pretty ? PrintPretty(*b) : Print(*b)) << "\n";
  return kOk;
}

int CmdCheck(const Flags& f, std::ostream& out, std::ostream&) {
  Loaded l = Load(f.files.at(0));
  Dialect d = MakeDialect(f.dialect, f.left_align);
  VarTable vars;
  for (const auto& [name, value] : InitialState(f.vars).local) vars.insert(name);
  auto r = CheckSafeTop(l.block, d.Table(), vars);
  if (!r) {
    out << "unsafe: " << r.error().ToString() << "\n";
    return kRejected;
  }
  out << "safe\n";
  return kOk;
}

int CmdRun(const Flags& f, std::ostream& out, std::ostream&) {
  Loaded l = Load(f.files.at(0));
  Dialect d = MakeDialect(f.dialect, f.left_align);
  CState initial = InitialState(f.vars);
  std::optional<StmtResult> result;
  RunWithLargeStack([&] { result = ExecTop(l.block, initial, d, f.fuel); });
  const StmtResult& r = *result;
  if (!r) {
    out << "error=" << r.error().ClassName() << "\n";
    return r.error().IsLimit() ? kRejected : kInputError;
  }
  for (const auto& [name, value] : r->cstate.local) out << name.name << "=" << ToDecimal(value) << "\n";
  out << "mode=" << ModeName(r->mode) << "\n";
  return kOk;
}

Block ApplyPass(const std::string& pass, const Block& b) {
  if (pass == "dead-code") return DeadCodeEliminate(b);
  if (pass == "loop-init-rewrite") return ForLoopInitRewrite(b);
  if (pass == "disambiguate") return ReferenceDisambiguate(b);
  throw InputError{"unknown pass '" + pass + "'"};
}

int CmdTransform(const Flags& f, std::ostream& out, std::ostream&) {
  Loaded l = Load(f.files.at(0));
  Block b = ApplyPass(f.pass, l.block);
  out << (f.pretty ? PrintPretty(b) : Print(b)) << "\n";
  return kOk;
}

int CmdValidate(const Flags& f, std::ostream& out, std::ostream&) {
  if (f.pass != "dead-code" && f.pass != "loop-init-rewrite" && f.pass != "disambiguate") {
    throw InputError{"unknown transform '" + f.pass + "'"};
  }
  Loaded old_l = Load(f.files.at(0));
  Loaded new_l = Load(f.files.at(1));
  Dialect d = MakeDialect(f.dialect, f.left_align);
  json cert = Certificate(f.pass, old_l, new_l);
  bool accepted = false;
  if (f.pass == "disambiguate") {
    auto c = CheckDisambiguation(old_l.block, new_l.block);
    if (c) {
      accepted = true;
      cert["detail"] = {{"variables", Pairs(c->variables)}, {"functions", Pairs(c->functions)}};
    } else {
      Reject(cert, std::string(ToString(c.error().kind)), c.error().context);
    }
  } else {
    Block expected = ApplyPass(f.pass, old_l.block);
    if (expected == new_l.block) {
      accepted = true;
    } else {
      Reject(cert, "structural-mismatch", "expected " + Print(expected));
    }
  }
  if (f.differential > 0) {
    json diff = Differential(f.pass, old_l.block, new_l.block, f.differential, f.diff_seed,
                             f.diff_max_fuel, d);
    if (accepted && diff["mismatches"].get<int>() > 0) {
      accepted = false;
      Reject(cert, "differential-mismatch", diff["first_mismatch"].dump());
    }
    cert["differential"] = std::move(diff);
  }
  if (accepted) cert["result"] = "accepted";
  out << cert.dump(2) << "\n";
  return accepted ? kOk : kRejected;
}

int CmdValidateRename(const Flags& f, std::ostream& out, std::ostream&) {
  Loaded old_l = Load(f.files.at(0));
  Loaded new_l = Load(f.files.at(1));
  json cert = Certificate("disambiguate", old_l, new_l);
  auto c = CheckDisambiguation(old_l.block, new_l.block);
  if (!c) {
    Reject(cert, std::string(ToString(c.error().kind)), c.error().context);
    out << cert.dump(2) << "\n";
    return kRejected;
  }
  cert["result"] = "accepted";
  cert["detail"] = {{"variables", Pairs(c->variables)}, {"functions", Pairs(c->functions)}};
  out << cert.dump(2) << "\n";
  return kOk;
}

int CmdSuite(const Flags& f, std::ostream& out, std::ostream&) {
  std::vector<std::string> names;
  if (f.suite == "all") {
    names = SuiteNames();
  } else if (f.suite == "list") {
    for (const std::string& n : SuiteNames()) out << n << "\n";
    return kOk;
  } else if (IsSuite(f.suite)) {
    names.push_back(f.suite);
  } else {
    throw InputError{"unknown suite '" + f.suite + "'"};
  }
  SuiteOptions opt;
  opt.n = f.n;
  opt.seed = f.seed;
  opt.fuels = f.fuels;
  opt.drop_nofun = f.drop_nofun;
  opt.allow_loop_init = f.allow_loop_init;
  opt.mutate_skip_output_zeroing = f.mutate;
  bool passed = true;
  for (const std::string& name : names) {
    SuiteReport report;
    if (f.replay) {
      std::string log;
      report = ReplayCase(name, *f.replay, opt, &log);
      out << log;
    } else {
      report = f.serial ? RunSuiteSerial(name, opt) : RunSuite(name, opt);
    }
    out << report.ToString(f.max_shown);
    if (!report.passed() && !f.replay) {
      std::vector<std::uint64_t> seeds;
      for (const SuiteFailure& failure : report.failures) {
        if (seeds.size() < f.max_shown && std::find(seeds.begin(), seeds.end(), failure.seed) == seeds.end()) {
          seeds.push_back(failure.seed);
        }
      }
      for (std::uint64_t s : seeds) out << "  replay: yulkit suite " << name << " --replay " << s << "\n";
    }
    passed = passed && report.passed();
  }
  return passed ? kOk : kRejected;
}

}  // namespace

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    s += kHex[digest[i] >> 4];
    s += kHex[digest[i] & 0xf];
  }
  return s;
}

int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yul parser, checker, interpreter and translation validator", "yulkit"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string("yulkit ") + YULKIT_VERSION);
  Flags f;

  auto add_dialect = [&](CLI::App* c) {
    c->add_option("--dialect", f.dialect, "evm-pure or none")->check(CLI::IsMember({"evm-pure", "none"}));
    c->add_flag("--string-left-align-32", f.left_align,
                "read string literals as left-aligned 32-byte words");
  };

  auto* parse = app.add_subcommand("parse", "parse Yul text and print the canonical form");
  parse->add_option("file", f.files)->required()->expected(1);
  parse->add_flag("--pretty", f.pretty);

  auto* check = app.add_subcommand("check", "run the static safety checker");
  check->add_option("file", f.files)->required()->expected(1);
  check->add_option("--var", f.vars, "free variable, as name=value or name=0");
  add_dialect(check);

  auto* run = app.add_subcommand("run", "execute a program");
  run->add_option("file", f.files)->required()->expected(1);
  run->add_option("--fuel", f.fuel, "interpreter limit");
  run->add_option("--var", f.vars, "initial local, name=value");
  add_dialect(run);

  auto* transform = app.add_subcommand("transform", "apply a transformation");
  transform->add_option("file", f.files)->required()->expected(1);
  transform->add_option("--pass", f.pass)
      ->required()
      ->check(CLI::IsMember({"dead-code", "loop-init-rewrite", "disambiguate"}));
  transform->add_flag("--pretty", f.pretty);

  auto* validate = app.add_subcommand("validate", "check a transformation instance");
  validate->add_option("old", f.files)->required()->expected(2);
  validate->add_option("--transform", f.pass)
      ->required()
      ->check(CLI::IsMember({"dead-code", "loop-init-rewrite", "disambiguate"}));
  validate->add_option("--differential", f.differential, "paired executions at random fuels");
  validate->add_option("--differential-seed", f.diff_seed);
  validate->add_option("--differential-max-fuel", f.diff_max_fuel);
  add_dialect(validate);

  auto* rename = app.add_subcommand("validate-rename", "check a disambiguation instance");
  rename->add_option("old", f.files)->required()->expected(2);

  auto* import = app.add_subcommand("import-json", "convert solc Yul AST JSON to Yul text");
  import->add_option("file", f.files)->required()->expected(1);
  import->add_flag("--pretty", f.pretty);

  auto* suite = app.add_subcommand("suite", "run a property suite (or 'all', 'list')");
  suite->add_option("name", f.suite)->required();
  suite->add_option("--n", f.n, "number of cases");
  suite->add_option("--seed", f.seed);
  suite->add_option("--fuel", f.fuels, "fuel values (suite default if absent)");
  suite->add_option("--replay", f.replay, "rerun one case seed verbosely");
  suite->add_flag("--serial", f.serial, "run without OpenMP");
  suite->add_flag("--drop-nofun", f.drop_nofun, "dead-code: allow nested definitions");
  suite->add_flag("--allow-loop-init", f.allow_loop_init, "dead-code: allow loop initializers");
  suite->add_flag("--mutate-skip-output-zeroing", f.mutate, "break the interpreter on purpose");
  suite->add_option("--max-shown", f.max_shown);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*parse) return CmdParse(f, out, err);
    if (*check) return CmdCheck(f, out, err);
    if (*run) return CmdRun(f, out, err);
    if (*transform) return CmdTransform(f, out, err);
    if (*validate) return CmdValidate(f, out, err);
    if (*rename) return CmdValidateRename(f, out, err);
    if (*import) return CmdImportJson(f, out, err);
    if (*suite) return CmdSuite(f, out, err);
  } catch (const InputError& e) {
    err << "yulkit: " << e.message << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace yul::cli
