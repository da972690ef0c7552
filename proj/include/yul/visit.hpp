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

#ifndef YUL_VISIT_HPP_
#define YUL_VISIT_HPP_

#include <utility>
#include <variant>

namespace yul {

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

template <typename Variant, typename... Fs>
decltype(auto) Visit(Variant&& v, Fs&&... fs) {
  return std::visit(Overloaded{std::forward<Fs>(fs)...},
                    std::forward<Variant>(v));
}

}  // namespace yul

#endif  // YUL_VISIT_HPP_
