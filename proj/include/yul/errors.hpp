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
#ifndef YUL_ERRORS_HPP_
#define YUL_ERRORS_HPP_

#include <cstdint>
#include <string_view>

namespace yul {

// Kinds of safety violations. The static checker reports the first block;
// the interpreter can additionally report the control-flow kinds at the end.
enum class ErrorKind : std::uint8_t {
  kUnknownVar,
  kUnknownFun,
  kDuplicateVar,
  kDuplicateFun,
  kArityMismatch,
  kResultCountMismatch,
  kLiteralTooLarge,
  kStringTooLong,
  kBadPath,
  kModeViolation,
  kDuplicateCase,
  kNonSingleValue,
  kEmptySwitch,
  // Dynamic only.
  kBreakOutsideLoop,
  kContinueOutsideLoop,
  kLeaveOutsideFunction,
  kFunctionModeError,
};

// Kebab-case name, e.g. "unknown-var".
std::string_view ToString(ErrorKind kind);

}  // namespace yul

#endif  // YUL_ERRORS_HPP_
