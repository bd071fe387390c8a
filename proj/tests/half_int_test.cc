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

#include "insqec/half_int.h"

#include <sstream>

#include <gtest/gtest.h>

namespace insqec {
namespace {

TEST(HalfIntTest, Construction) {
    EXPECT_EQ(HalfInt::from_twice(5).twice(), 5);
    EXPECT_EQ(HalfInt::integer(3).twice(), 6);
    EXPECT_EQ(HalfInt::half(3), HalfInt::from_twice(3));
    EXPECT_DOUBLE_EQ(HalfInt::from_twice(-3).value(), -1.5);
    EXPECT_EQ(kHalf.twice(), 1);
}

TEST(HalfIntTest, Arithmetic) {
    HalfInt a = HalfInt::from_twice(3), b = HalfInt::from_twice(5);
    EXPECT_EQ(a + b, HalfInt::integer(4));
    EXPECT_EQ(b - a, HalfInt::integer(1));
    EXPECT_EQ(-a, HalfInt::from_twice(-3));
    HalfInt c = a;
    c += kHalf;
    EXPECT_EQ(c, HalfInt::integer(2));
    c -= b;
    EXPECT_EQ(c, HalfInt::from_twice(-1));
    EXPECT_EQ(c.abs(), kHalf);
}

TEST(HalfIntTest, ParityAndOrder) {
    EXPECT_TRUE(HalfInt::integer(2).is_integer());
    EXPECT_FALSE(kHalf.is_integer());
    EXPECT_TRUE(HalfInt::from_twice(3).same_parity(HalfInt::from_twice(-1)));
    EXPECT_FALSE(HalfInt::from_twice(3).same_parity(HalfInt::integer(1)));
    EXPECT_LT(HalfInt::from_twice(-1), kHalf);
    EXPECT_GT(HalfInt::integer(1), kHalf);
    EXPECT_EQ(HalfInt::integer(-2).as_integer(), -2);
}

TEST(HalfIntTest, Printing) {
    EXPECT_EQ(HalfInt::from_twice(5).str(), "5/2");
    EXPECT_EQ(HalfInt::from_twice(-1).str(), "-1/2");
    EXPECT_EQ(HalfInt::integer(3).str(), "3");
    std::ostringstream out;
    out << HalfInt::from_twice(7);
    EXPECT_EQ(out.str(), "7/2");
}

}  // namespace
}  // namespace insqec
