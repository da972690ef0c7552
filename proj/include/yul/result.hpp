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

#ifndef YUL_RESULT_HPP_
#define YUL_RESULT_HPP_

#include <cassert>
#include <type_traits>
#include <utility>
#include <variant>

namespace yul {

// Error wrapper used to construct a failed Result, in the spirit of
// std::unexpected (not available before C++23).
template <typename E>
struct Unexpected {
  E error;
};

template <typename E>
Unexpected(E) -> Unexpected<E>;

// Either a value of type T or an error of type E.
template <typename T, typename E>
class [[nodiscard]] Result {
 public:
  using value_type = T;
  using error_type = E;

  Result(T value) : storage_(std::in_place_index<0>, std::move(value)) {}
  Result(Unexpected<E> err)
      : storage_(std::in_place_index<1>, std::move(err.error)) {}

  bool has_value() const { return storage_.index() == 0; }
  explicit operator bool() const { return has_value(); }

  T& value() & {
    assert(has_value());
    return std::get<0>(storage_);
  }
  const T& value() const& {
    assert(has_value());
    return std::get<0>(storage_);
  }
  T&& value() && {
    assert(has_value());
    return std::get<0>(std::move(storage_));
  }

  E& error() & {
    assert(!has_value());
    return std::get<1>(storage_);
  }
  const E& error() const& {
    assert(!has_value());
    return std::get<1>(storage_);
  }
  E&& error() && {
    assert(!has_value());
    return std::get<1>(std::move(storage_));
  }

  T& operator*() & { return value(); }
  const T& operator*() const& { return value(); }
  T&& operator*() && { return std::move(*this).value(); }
  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }

  // As std::expected: equal to a value iff holding an equal one.
  friend bool operator==(const Result& r, const T& v) {
    return r.has_value() && *r == v;
  }

 private:
  std::variant<T, E> storage_;
};

// Result without a payload.
struct Ok {
  friend bool operator==(Ok, Ok) { return true; }
};

template <typename E>
using Status = Result<Ok, E>;

}  // namespace yul

#define YUL_CONCAT_INNER_(a, b) a##b
#define YUL_CONCAT_(a, b) YUL_CONCAT_INNER_(a, b)

// Evaluates `expr` (a Result); on error returns the error from the enclosing
// function, otherwise move-assigns the value into `lhs`.
#define YUL_ASSIGN_OR_RETURN(lhs, expr) \
  YUL_ASSIGN_OR_RETURN_IMPL_(YUL_CONCAT_(yul_result_, __LINE__), lhs, expr)

#define YUL_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, expr)        \
  auto tmp = (expr);                                      \
  if (!tmp.has_value()) {                                 \
    return ::yul::Unexpected{std::move(tmp).error()};     \
  }                                                       \
  lhs = std::move(tmp).value()

#define YUL_RETURN_IF_ERROR(expr)                                           \
  do {                                                                      \
    auto yul_status_ = (expr);                                              \
    if (!yul_status_.has_value()) {                                         \
      return ::yul::Unexpected{std::move(yul_status_).error()};             \
    }                                                                       \
  } while (false)

#endif  // YUL_RESULT_HPP_
