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

#include "insqec/exact.h"
#include "insqec/half_int.h"

namespace insqec {

/// Arguments of the coefficient <j1 m1; j2 m2 | j m>.
struct CgArgs {
    HalfInt j1;
    HalfInt m1;
    HalfInt j2;
    HalfInt m2;
    HalfInt j;
    HalfInt m;
};

/// A Clebsch-Gordan coefficient held exactly as sign * sqrt(squared).
struct CgExact {
    int sign = 0;  // -1, 0 or +1
    Rational squared;

    double value() const {
        return signed_sqrt(sign, squared);
    }
};

/// Throws InvalidCoupling when the (j, m) ranges, the triangle rule or the
/// parity rule is violated. Does not look at m = m1 + m2.
void validate_coupling(const CgArgs &args);

/// Exact Condon-Shortley coefficient from Racah's closed form.
///
/// The alternating sum and prefactor are accumulated as one exact rational;
/// nothing is rounded until value() takes the final square root. Returns an
/// exact zero when m != m1 + m2.
CgExact cg_exact(const CgArgs &args);

/// cg_exact(args).value().
double cg(const CgArgs &args);

/// Spin-N/2 (weight k, m1 = k - N/2) coupled with a spin-1/2 (m2) into the
/// stretched total (N+1)/2:
///   sqrt(binom(N, k) / binom(N+1, k + m2 + 1/2)).
double cg_ohara_symmetric(int N, int k, HalfInt m2);

/// Spin-N/2 (weight k) coupled with a spin-1/2 (m2) into (N-1)/2:
///   m2 = +1/2  ->  -sqrt((N - k) / (N + 1))
///   m2 = -1/2  ->  +sqrt(k / (N + 1))
double cg_recursion_mixed(int N, int k, HalfInt m2);

}  // namespace insqec
