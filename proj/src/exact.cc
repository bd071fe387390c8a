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

#include "insqec/exact.h"

#include <cmath>
#include <mutex>
#include <vector>

namespace insqec {

BigInt factorial(int n) {
    if (n < 0) {
        return 0;
    }
    static std::mutex mu;
    static std::vector<BigInt> table{1};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        table.push_back(table.back() * static_cast<int>(table.size()));
    }
    return table[n];
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (int i = 1; i <= k; i++) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

double signed_sqrt(int sign, const Rational &value) {
    double magnitude = std::sqrt(to_double(value));
    return sign < 0 ? -magnitude : magnitude;
}

}  // namespace insqec
