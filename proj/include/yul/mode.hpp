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
#ifndef YUL_MODE_HPP_
#define YUL_MODE_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace yul {

// How a statement or block terminates.
enum class Mode : std::uint8_t { kRegular, kBreak, kContinue, kLeave };

std::string_view ToString(Mode mode);

// A subset of the four modes, stored as a bit mask.
class ModeSet {
 public:
  constexpr ModeSet() = default;
  constexpr ModeSet(std::initializer_list<Mode> modes) {
    for (Mode m : modes) Insert(m);
  }

  constexpr bool Contains(Mode m) const { return (bits_ & Bit(m)) != 0; }
  constexpr void Insert(Mode m) { bits_ |= Bit(m); }
  constexpr void Erase(Mode m) { bits_ &= static_cast<std::uint8_t>(~Bit(m)); }
  constexpr bool Empty() const { return bits_ == 0; }
  constexpr bool SubsetOf(ModeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr ModeSet Union(ModeSet other) const {
    ModeSet r;
    r.bits_ = bits_ | other.bits_;
    return r;
  }
  constexpr ModeSet Without(Mode m) const {
    ModeSet r = *this;
    r.Erase(m);
    return r;
  }

  // e.g. "{regular, break}"
  std::string ToString() const;

  friend constexpr bool operator==(ModeSet, ModeSet) = default;

 private:
  static constexpr std::uint8_t Bit(Mode m) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(m));
  }
  std::uint8_t bits_ = 0;
};

}  // namespace yul

#endif  // YUL_MODE_HPP_
