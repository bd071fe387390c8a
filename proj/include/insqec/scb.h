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

#include <cstdint>
#include <map>
#include <vector>

#include "insqec/half_int.h"
#include "insqec/states.h"

namespace insqec {

/// Intermediate totals j_[1] = 1/2, j_[2], ..., j_[M] met while coupling the
/// qubits one at a time in index order. The last entry is the total j.
struct CouplingPath {
    std::vector<HalfInt> steps;

    HalfInt total() const {
        return steps.back();
    }
    int num_qubits() const {
        return static_cast<int>(steps.size());
    }
    /// Throws std::invalid_argument unless j_[1] = 1/2 and every step moves
    /// by exactly 1/2 while staying non-negative.
    void validate() const;

    std::vector<int> twice_values() const;
    bool operator==(const CouplingPath &) const = default;
    /// Lexicographic on the twice-j sequence.
    bool operator<(const CouplingPath &other) const;
};

/// All coupling paths on M qubits, lexicographically ordered.
std::vector<CouplingPath> enumerate_paths(int M);

/// Number of coupling paths on M qubits that end at j.
uint64_t multiplicity(int M, HalfInt j);

/// Largest M for which build_scb materializes every path.
inline constexpr int kMaxScbQubits = 10;

/// Sequentially coupled basis |j, m>_p as dense vectors.
class ScbBasis {
   public:
    ScbBasis() = default;

    int num_qubits() const {
        return num_qubits_;
    }
    /// False when only the symmetric (all-up) path was materialized.
    bool complete() const {
        return complete_;
    }
    const std::vector<CouplingPath> &paths() const {
        return paths_;
    }
    /// Indices into paths() whose total is j.
    std::vector<std::size_t> paths_ending_at(HalfInt j) const;

    /// |j, m>_p for path index p and m in -j..j.
    const DenseState &state(std::size_t path, HalfInt m) const;

    std::size_t size() const;

    /// Coefficient of every basis vector: result[(p, m)] = <j, m|_p psi>.
    std::map<std::pair<std::size_t, int>, Complex> expand(const DenseState &psi, double cutoff = 0) const;

    /// sum_{m, p} |j, m>_p <j, m|_p as a dense matrix.
    Eigen::MatrixXcd sector_projector(HalfInt j) const;

    friend ScbBasis build_scb(int M);
    friend ScbBasis build_symmetric_scb(int M);

   private:
    int num_qubits_ = 0;
    bool complete_ = false;
    std::vector<CouplingPath> paths_;
    // states_[p][i] holds m = j - i.
    std::vector<std::vector<DenseState>> states_;
};

/// Every |j, m>_p on M <= kMaxScbQubits qubits, built by iterated
/// Clebsch-Gordan coupling of qubit i+1 onto the running total of qubits
/// 1..i. Condon-Shortley phases throughout.
ScbBasis build_scb(int M);

/// Only the all-up path (Dicke states); any M within the dense cap.
ScbBasis build_symmetric_scb(int M);

/// <j, m|_p psi for every path p ending at j. Throws LeakageError when psi is
/// not inside the (j, m) eigenspace within 1e-10.
std::map<std::size_t, Complex> overlap_coefficients(const DenseState &psi, const ScbBasis &basis, HalfInt j,
                                                    HalfInt m);

/// |j, m>_p -> |j, -m>_p applied to psi. Needs a complete basis unless psi is
/// symmetric, in which case Dicke weights are mirrored directly.
DenseState negate_m(const DenseState &psi, const ScbBasis &basis);

/// {"num_qubits": M, "states": [{"twice_j", "twice_m", "path", "amps"}]}
/// with amps in the sparse [index, re, im] form.
nlohmann::json to_json(const ScbBasis &basis);

}  // namespace insqec
