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

// Conversion of the Yul AST JSON exported by solc into syntax trees.
//
// Consumed keys: nodeType, statements, body, condition, expression, value,
// variables, variableNames, functionName, arguments, parameters,
// returnVariables, cases, pre, post, kind, name, hexValue, type. Everything
// else (src, nativeSrc, documentation, ...) is ignored.

#ifndef YUL_SOLC_JSON_HPP_
#define YUL_SOLC_JSON_HPP_

#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "yul/ast.hpp"
#include "yul/result.hpp"

namespace yul {

struct ConvertError {
  std::string input;   // which file, when converting a pair; may be empty
  std::string path;    // e.g. "/code/block/statements/2/value"
  std::string reason;

  std::string ToString() const;
};

// Accepts a YulBlock, or one of the wrappers solc puts around it: YulCode,
// YulObject, InlineAssembly (its AST member), or a standard-JSON output
// with exactly one source.
Result<Block, ConvertError> ConvertSolcJson(const nlohmann::json& json);

// Parses the text first; malformed JSON is reported at path "/".
Result<Block, ConvertError> ConvertSolcJsonText(std::string_view text);

Result<std::pair<Block, Block>, ConvertError> ConvertSolcJsonPair(
    std::string_view old_text, std::string_view new_text);

}  // namespace yul

#endif  // YUL_SOLC_JSON_HPP_
