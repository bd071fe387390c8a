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

#include "insqec/cg.h"

#include <algorithm>
#include <string>

#include "insqec/errors.h"

namespace insqec {

namespace {

std::string describe(const CgArgs &a) {
    return "<" + a.j1.str() + " " + a.m1.str() + "; " + a.j2.str() + " " + a.m2.str() + " | " + a.j.str() + " " +
           a.m.str() + ">";
}

bool valid_pair(HalfInt j, HalfInt m) {
    return j.twice() >= 0 && m.abs() <= j && j.same_parity(m);
}

}  // namespace

void validate_coupling(const CgArgs &a) {
    if (!valid_pair(a.j1, a.m1) || !valid_pair(a.j2, a.m2) || !valid_pair(a.j, a.m)) {
        throw InvalidCoupling("invalid (j, m) pair in " + describe(a));
    }
    HalfInt lo = (a.j1 - a.j2).abs();
    HalfInt hi = a.j1 + a.j2;
    if (a.j < lo || a.j > hi || !a.j.same_parity(hi)) {
        throw InvalidCoupling("triangle rule violated in " + describe(a));
    }
}

CgExact cg_exact(const CgArgs &a) {
    validate_coupling(a);
    if (a.m != a.m1 + a.m2) {
        return {};
    }

    // All of these are integers once the triangle and parity rules hold.
    int j1_plus_j2_minus_j = (a.j1 + a.j2 - a.j).as_integer();
    int j1_minus_j2_plus_j = (a.j1 - a.j2 + a.j).as_integer();
    int j2_minus_j1_plus_j = (a.j2 - a.j1 + a.j).as_integer();
    int total_plus_one = (a.j1 + a.j2 + a.j).as_integer() + 1;
    int j1_plus_m1 = (a.j1 + a.m1).as_integer();
    int j1_minus_m1 = (a.j1 - a.m1).as_integer();
    int j2_plus_m2 = (a.j2 + a.m2).as_integer();
    int j2_minus_m2 = (a.j2 - a.m2).as_integer();
    int j_plus_m = (a.j + a.m).as_integer();
    int j_minus_m = (a.j - a.m).as_integer();
    int j_minus_j2_plus_m1 = (a.j - a.j2 + a.m1).as_integer();
    int j_minus_j1_minus_m2 = (a.j - a.j1 - a.m2).as_integer();

    int k_lo = std::max({0, -j_minus_j2_plus_m1, -j_minus_j1_minus_m2});
    int k_hi = std::min({j1_plus_j2_minus_j, j1_minus_m1, j2_plus_m2});

    Rational sum = 0;
    for (int k = k_lo; k <= k_hi; k++) {
        BigInt denom = factorial(k) * factorial(j1_plus_j2_minus_j - k) * factorial(j1_minus_m1 - k) *
                       factorial(j2_plus_m2 - k) * factorial(j_minus_j2_plus_m1 + k) *
                       factorial(j_minus_j1_minus_m2 + k);
        Rational term(BigInt(1), denom);
        if (k % 2) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    if (sum == 0) {
        return {};
    }

    Rational prefactor(BigInt(a.j.twice() + 1) * factorial(j1_plus_j2_minus_j) * factorial(j1_minus_j2_plus_j) *
                           factorial(j2_minus_j1_plus_j) * factorial(j1_plus_m1) * factorial(j1_minus_m1) *
                           factorial(j2_plus_m2) * factorial(j2_minus_m2) * factorial(j_plus_m) *
                           factorial(j_minus_m),
                       factorial(total_plus_one));

    CgExact out;
    out.sign = sum > 0 ? 1 : -1;
    out.squared = prefactor * sum * sum;
    return out;
}

double cg(const CgArgs &args) {
    return cg_exact(args).value();
}

namespace {

void check_weight(int N, int k, HalfInt m2) {
    if (N < 0 || k < 0 || k > N) {
        throw std::out_of_range("weight k=" + std::to_string(k) + " outside 0.." + std::to_string(N));
    }
    if (m2.abs() != kHalf) {
        throw std::out_of_range("spin-1/2 projection must be +-1/2, got " + m2.str());
    }
}

}  // namespace

double cg_ohara_symmetric(int N, int k, HalfInt m2) {
    check_weight(N, k, m2);
    int upper = k + (m2 + kHalf).as_integer();
    return signed_sqrt(1, Rational(binomial(N, k), binomial(N + 1, upper)));
}

double cg_recursion_mixed(int N, int k, HalfInt m2) {
    check_weight(N, k, m2);
    if (N < 1) {
        throw std::out_of_range("(N-1)/2 coupling needs N >= 1");
    }
    if (m2 > HalfInt()) {
        return signed_sqrt(-1, Rational(N - k, N + 1));
    }
    return signed_sqrt(1, Rational(k, N + 1));
}

}  // namespace insqec
