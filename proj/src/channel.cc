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

#include "insqec/channel.h"

#include <stdexcept>
#include <string>

#include "insqec/errors.h"

namespace insqec {

DenseState tensor(const DenseState &left, const DenseState &right) {
    require_dense_capacity(left.num_qubits + right.num_qubits, "tensor");
    DenseState out = DenseState::zero(left.num_qubits + right.num_qubits);
    Eigen::Index left_dim = left.amps.size();
    for (Eigen::Index r = 0; r < right.amps.size(); r++) {
        out.amps.segment(r * left_dim, left_dim) = right.amps[r] * left.amps;
    }
    return out;
}

DenseState single_qubit(const QubitAmplitudes &q) {
    DenseState s = DenseState::zero(1);
    s.amps[0] = q.c0;
    s.amps[1] = q.c1;
    return s;
}

DenseState insert(const DenseState &state, const InsertionQubit &q1, int position) {
    int N = state.num_qubits;
    if (position < 0 || position > N) {
        throw std::out_of_range("insertion position " + std::to_string(position) + " outside 0.." +
                                std::to_string(N));
    }
    require_dense_capacity(N + 1, "insert");
    DenseState out = DenseState::zero(N + 1);
    uint64_t low_mask = (uint64_t{1} << position) - 1;
    for (Eigen::Index i = 0; i < state.amps.size(); i++) {
        Complex a = state.amps[i];
        if (a == Complex(0)) {
            continue;
        }
        uint64_t x = static_cast<uint64_t>(i);
        uint64_t spread = (x & low_mask) | ((x & ~low_mask) << 1);
        out.amps[static_cast<Eigen::Index>(spread)] += a * q1.c0;
        out.amps[static_cast<Eigen::Index>(spread | (uint64_t{1} << position))] += a * q1.c1;
    }
    return out;
}

}  // namespace insqec
