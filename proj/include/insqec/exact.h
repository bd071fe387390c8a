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

#include <boost/multiprecision/cpp_int.hpp>

namespace insqec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! for n >= 0.
BigInt factorial(int n);

/// Binomial coefficient; zero outside 0 <= k <= n (and for negative n).
BigInt binomial(int n, int k);

double to_double(const Rational &r);

/// sign * sqrt(value), with the square root taken in binary64 at the end.
double signed_sqrt(int sign, const Rational &value);

}  // namespace insqec
