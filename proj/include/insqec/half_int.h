// Copyright 2026 The insqec Authors
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

#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

namespace insqec {

/// Exact half-integer, stored as twice its value.
///
/// Angular-momentum quantum numbers j and m are always integers or
/// half-integers; keeping them as doubled integers makes every comparison and
/// sum exact.
class HalfInt {
   public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt integer(int value) {
        return from_twice(2 * value);
    }
    /// numerator / 2
    static constexpr HalfInt half(int numerator) {
        return from_twice(numerator);
    }

    constexpr int twice() const {
        return twice_;
    }
    constexpr double value() const {
        return twice_ / 2.0;
    }
    constexpr bool is_integer() const {
        return twice_ % 2 == 0;
    }
    constexpr bool same_parity(HalfInt other) const {
        return ((twice_ - other.twice_) % 2) == 0;
    }
    constexpr HalfInt abs() const {
        return from_twice(twice_ < 0 ? -twice_ : twice_);
    }

    constexpr HalfInt operator-() const {
        return from_twice(-twice_);
    }
    constexpr HalfInt operator+(HalfInt o) const {
        return from_twice(twice_ + o.twice_);
    }
    constexpr HalfInt operator-(HalfInt o) const {
        return from_twice(twice_ - o.twice_);
    }
    constexpr HalfInt &operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }
    constexpr HalfInt &operator-=(HalfInt o) {
        twice_ -= o.twice_;
        return *this;
    }

    constexpr auto operator<=>(const HalfInt &) const = default;

    /// Value as an integer. Only meaningful when is_integer().
    constexpr int as_integer() const {
        return twice_ / 2;
    }

    std::string str() const {
        if (is_integer()) {
            return std::to_string(twice_ / 2);
        }
        return std::to_string(twice_) + "/2";
    }

   private:
    int twice_ = 0;
};

inline std::ostream &operator<<(std::ostream &out, HalfInt h) {
    return out << h.str();
}

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace insqec
