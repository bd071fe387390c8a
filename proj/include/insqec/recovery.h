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

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "insqec/analytic.h"
#include "insqec/rng.h"
#include "insqec/scb.h"
#include "insqec/states.h"
#include "insqec/syndrome.h"

namespace insqec {

/// A logical qubit held as amplitudes on an explicit codeword basis.
struct LogicalRegister {
    std::array<DenseState, 2> basis;
    std::array<Complex, 2> payload{Complex(1), Complex(0)};

    int num_qubits() const {
        return basis[0].num_qubits;
    }
    /// payload[0] |0_L> + payload[1] |1_L>.
    DenseState state() const;
    /// Throws std::invalid_argument unless the basis is orthonormal and the
    /// payload normalized, both within `tol`.
    void validate(double tol = 1e-10) const;

    /// The N-qubit gnu code register holding q.
    static LogicalRegister from_code(const GnuCode &code, const LogicalQubit &q);
};

/// Two logical registers after an entangling gate: amps(x, y) is the
/// amplitude of |x_L>_control |y_L>_target.
struct LogicalPair {
    std::array<DenseState, 2> control_basis;
    std::array<DenseState, 2> target_basis;
    Eigen::Matrix2cd amps;
};

/// Orthonormal codeword basis {|0>, |1>} of the codespace labelled by
/// syndrome s, reconstructed from any state inside it.
///
/// The codewords of a branch share one coupled multiplet |j, m>_eta whose
/// path content eta depends on the unknown insertion position. One weight
/// component of `state` fixes that multiplet; ladder operators generate its
/// other m values; the position-free codeword profile supplies the
/// coefficients. Throws LeakageError when `state` is not in the sector.
std::array<DenseState, 2> codespace_basis(const GnuCode &code, const SyndromeKey &s, const DenseState &state);

struct ReadoutDistribution {
    std::array<double, 2> probability{};
    std::array<DenseState, 2> collapsed;  // normalized, zero when probability is 0
};

/// Logical-Z measurement on an (N+1)-qubit state in the codespace of s,
/// realised as the class of the weight k modulo 2g after removing the
/// inserted bit: (k - b) mod 2g = 0 reads 0 and = g reads 1. Does not use
/// the insertion position. Throws LeakageError when more than 1e-8 of the
/// norm lies outside both classes or outside the j-sector.
ReadoutDistribution logical_z_distribution(const DenseState &state, const GnuCode &code, const SyndromeKey &s);

struct ReadoutResult {
    int bit = 0;
    double probability = 0;
    DenseState collapsed;
};

ReadoutResult logical_z_readout(const DenseState &state, const GnuCode &code, const SyndromeKey &s, Rng &rng);

/// Result of the physical m -> -m map on a register.
struct LogicalXResult {
    LogicalRegister output;
    /// Induced action on the codeword basis: column x is the image of |x_L>.
    Eigen::Matrix2cd induced;
    /// True when `induced` is the Pauli X matrix within 1e-10.
    bool is_pauli_x = false;
};

/// Applies |j, m>_p -> |j, -m>_p to the register's codewords and reads off
/// the induced 2x2 action. `basis` may be omitted for symmetric codewords.
/// Throws LeakageError("logical-X unsupported for this codespace") when the
/// image leaves the span of the codewords.
LogicalXResult logical_x(const LogicalRegister &reg, const ScbBasis *basis = nullptr);

/// Pauli X on the payload, acting on the codeword basis directly.
LogicalRegister pauli_x(const LogicalRegister &reg);

/// |x_L>|y_L> -> |x_L>|(y xor x)_L> on the 4-dimensional logical space.
/// Throws std::invalid_argument when either basis is not orthonormal.
LogicalPair logical_cnot(const LogicalRegister &control, const LogicalRegister &target);

/// Singular values of amps, in descending order.
std::array<double, 2> schmidt_coefficients(const LogicalPair &pair);

struct RecoveryOutcome {
    SyndromeKey syndrome;
    int bit = 0;
    double probability = 0;
    bool corrected = false;
    /// "none", "m_negation" (physical logical-X) or "codespace_x".
    std::string correction = "none";
    std::array<Complex, 2> source_payload{};
    LogicalRegister output;
    double fidelity = 0;

    nlohmann::json to_json() const;
};

/// Extension point for recovery routes that follow teleportation. The
/// default leaves the register unchanged.
LogicalRegister post_recovery_hook(const LogicalRegister &reg);

/// Teleport the payload of a projected (N+1)-qubit state back onto a fresh
/// gnu code register: prepare |+_L> on the ancilla code, logical CNOT from
/// the ancilla onto the projected register, logical-Z readout of the
/// projected register, and logical X on the ancilla when the bit is 1.
///
/// `source_code` is the code that suffered the insertion. Fidelity is taken
/// against encode(ancilla_code, expected) when `expected` is given, and
/// against the payload read from `projected` otherwise. Throws
/// std::invalid_argument when the gaps differ.
RecoveryOutcome teleport(const GnuCode &ancilla_code, const GnuCode &source_code, const DenseState &projected,
                         const SyndromeKey &s, uint64_t seed,
                         const std::optional<LogicalQubit> &expected = std::nullopt);

}  // namespace insqec
