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

#include "insqec/states.h"

namespace insqec {

/// The stray qubit v0|0> + v1|1>.
using InsertionQubit = QubitAmplitudes;

/// Kronecker product with `left` on the low-index qubits: qubits
/// 0..left.num_qubits-1 come from `left`, the rest from `right`.
DenseState tensor(const DenseState &left, const DenseState &right);

DenseState single_qubit(const QubitAmplitudes &q);

/// Insert q1 so that it becomes qubit `position` of an (N+1)-qubit state.
/// Qubits position..N-1 of the input move up by one; position 0 prepends and
/// position N appends. Throws std::out_of_range unless 0 <= position <= N.
DenseState insert(const DenseState &state, const InsertionQubit &q1, int position);

}  // namespace insqec
