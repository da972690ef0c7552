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

// Subcommands of the yulkit tool. Kept apart from main so that tests and
// the acceptance driver can run them in-process.

#ifndef YULKIT_TOOLS_COMMANDS_HPP_
#define YULKIT_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace yul::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;
inline constexpr int kInputError = 2;

// `args` excludes the program name.
int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256 of `data`.
std::string Sha256Hex(const std::string& data);

}  // namespace yul::cli

#endif  // YULKIT_TOOLS_COMMANDS_HPP_
