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
#include <string>

#include "yul/errors.hpp"
#include "yul/mode.hpp"

namespace yul {

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownVar: return "unknown-var";
    case ErrorKind::kUnknownFun: return "unknown-fun";
    case ErrorKind::kDuplicateVar: return "duplicate-var";
    case ErrorKind::kDuplicateFun: return "duplicate-fun";
    case ErrorKind::kArityMismatch: return "arity-mismatch";
    case ErrorKind::kResultCountMismatch: return "result-count-mismatch";
    case ErrorKind::kLiteralTooLarge: return "literal-too-large";
    case ErrorKind::kStringTooLong: return "string-too-long";
    case ErrorKind::kBadPath: return "bad-path";
    case ErrorKind::kModeViolation: return "mode-violation";
    case ErrorKind::kDuplicateCase: return "duplicate-case";
    case ErrorKind::kNonSingleValue: return "non-single-value";
    case ErrorKind::kEmptySwitch: return "empty-switch";
    case ErrorKind::kBreakOutsideLoop: return "break-outside-loop";
    case ErrorKind::kContinueOutsideLoop: return "continue-outside-loop";
    case ErrorKind::kLeaveOutsideFunction: return "leave-outside-function";
    case ErrorKind::kFunctionModeError: return "function-mode-error";
  }
  return "unknown";
}

std::string_view ToString(Mode mode) {
  switch (mode) {
    case Mode::kRegular: return "regular";
    case Mode::kBreak: return "break";
    case Mode::kContinue: return "continue";
    case Mode::kLeave: return "leave";
  }
  return "?";
}

std::string ModeSet::ToString() const {
  std::string out = "{";
  for (Mode m : {Mode::kRegular, Mode::kBreak, Mode::kContinue, Mode::kLeave}) {
    if (!Contains(m)) continue;
    if (out.size() > 1) out += ", ";
    out += yul::ToString(m);
  }
  return out + "}";
}

}  // namespace yul
