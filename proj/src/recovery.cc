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

#include "insqec/recovery.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "insqec/errors.h"
#include "insqec/oracle.h"

namespace insqec {

namespace {

constexpr double kLeakageTolerance = 1e-8;

DenseState weight_component(const DenseState &state, int k) {
    DenseState out = DenseState::zero(state.num_qubits);
    for (Eigen::Index x = 0; x < state.amps.size(); x++) {
        if (hamming_weight(static_cast<uint64_t>(x)) == k) {
            out.amps[x] = state.amps[x];
        }
    }
    return out;
}

void require_sector(const DenseState &state, HalfInt j) {
    double scale = std::max(1.0, state.amps.norm());
    if (sector_residual(state, j) > kLeakageTolerance * scale) {
        throw LeakageError("state is not inside the j = " + j.str() + " sector");
    }
}

nlohmann::json complex_pair(const std::array<Complex, 2> &c) {
    return nlohmann::json::array({{c[0].real(), c[0].imag()}, {c[1].real(), c[1].imag()}});
}

}  // namespace

DenseState LogicalRegister::state() const {
    DenseState out = DenseState::zero(num_qubits());
    out.amps = payload[0] * basis[0].amps + payload[1] * basis[1].amps;
    return out;
}

void LogicalRegister::validate(double tol) const {
    if (basis[0].num_qubits != basis[1].num_qubits) {
        throw std::invalid_argument("codewords live on different qubit counts");
    }
    for (int x = 0; x < 2; x++) {
        if (std::abs(basis[x].norm_squared() - 1) > tol) {
            throw std::invalid_argument("codeword basis is not normalized");
        }
    }
    if (std::abs(basis[0].inner(basis[1])) > tol) {
        throw std::invalid_argument("codeword basis is not orthogonal");
    }
    if (std::abs(std::norm(payload[0]) + std::norm(payload[1]) - 1) > tol) {
        throw std::invalid_argument("payload is not normalized");
    }
}

LogicalRegister LogicalRegister::from_code(const GnuCode &code, const LogicalQubit &q) {
    require_dense_capacity(code.num_qubits(), "logical register");
    LogicalRegister reg;
    reg.basis = {to_dense(logical_codeword(code, 0)), to_dense(logical_codeword(code, 1))};
    reg.payload = {q.c0, q.c1};
    return reg;
}

std::array<DenseState, 2> codespace_basis(const GnuCode &code, const SyndromeKey &s, const DenseState &state) {
    int M = code.num_qubits() + 1;
    if (state.num_qubits != M) {
        throw std::invalid_argument("codespace state must have N+1 qubits");
    }
    require_sector(state, s.j);
    std::array<CodewordProfile, 2> profile{codeword_profile(code, s, 0), codeword_profile(code, s, 1)};
    std::map<int, int> sign_of;
    for (const auto &p : profile) {
        for (const auto &t : p.terms) {
            sign_of[t.weight] = t.sign;
        }
    }

    int anchor = -1;
    double best = 0;
    for (const auto &[k, w] : state.weight_histogram()) {
        if (w > best && sign_of.count(k)) {
            best = w;
            anchor = k;
        }
    }
    if (anchor < 0) {
        throw LeakageError("state has no weight in the codespace of syndrome " + s.str());
    }

    std::map<int, DenseState> ladder;
    ladder[anchor] = weight_component(state, anchor).normalized();
    ladder[anchor].amps *= static_cast<double>(sign_of[anchor]);
    int lo = sign_of.begin()->first, hi = sign_of.rbegin()->first;
    for (int k = anchor + 1; k <= hi; k++) {
        ladder[k] = apply_j_plus(ladder[k - 1]).normalized();
    }
    for (int k = anchor - 1; k >= lo; k--) {
        ladder[k] = apply_j_minus(ladder[k + 1]).normalized();
    }

    std::array<DenseState, 2> out{DenseState::zero(M), DenseState::zero(M)};
    for (int x = 0; x < 2; x++) {
        for (const auto &t : profile[x].terms) {
            out[x].amps += t.amp() * ladder[t.weight].amps;
        }
        out[x] = out[x].normalized();
    }
    return out;
}

ReadoutDistribution logical_z_distribution(const DenseState &state, const GnuCode &code, const SyndromeKey &s) {
    if (state.num_qubits != code.num_qubits() + 1) {
        throw std::invalid_argument("readout state must have N+1 qubits");
    }
    require_sector(state, s.j);
    int b = inserted_bit(code, s);
    int g = code.g();
    ReadoutDistribution out;
    out.collapsed = {DenseState::zero(state.num_qubits), DenseState::zero(state.num_qubits)};
    double leaked = 0;
    for (Eigen::Index x = 0; x < state.amps.size(); x++) {
        int r = ((hamming_weight(static_cast<uint64_t>(x)) - b) % (2 * g) + 2 * g) % (2 * g);
        if (r == 0) {
            out.collapsed[0].amps[x] = state.amps[x];
        } else if (r == g) {
            out.collapsed[1].amps[x] = state.amps[x];
        } else {
            leaked += std::norm(state.amps[x]);
        }
    }
    double total = state.norm_squared();
    if (std::sqrt(leaked) > kLeakageTolerance * std::max(1.0, std::sqrt(total))) {
        throw LeakageError("state leaks outside the logical-Z classes of syndrome " + s.str());
    }
    for (int x = 0; x < 2; x++) {
        double p = out.collapsed[x].norm_squared();
        out.probability[x] = p / total;
        if (p > kZeroBranchCutoff) {
            out.collapsed[x] = out.collapsed[x].normalized();
        } else {
            out.collapsed[x] = DenseState::zero(state.num_qubits);
        }
    }
    return out;
}

ReadoutResult logical_z_readout(const DenseState &state, const GnuCode &code, const SyndromeKey &s, Rng &rng) {
    ReadoutDistribution dist = logical_z_distribution(state, code, s);
    int bit = static_cast<int>(sample_index({dist.probability[0], dist.probability[1]}, rng));
    return {bit, dist.probability[bit], dist.collapsed[bit]};
}

LogicalXResult logical_x(const LogicalRegister &reg, const ScbBasis *basis) {
    ScbBasis symmetric;
    if (!basis) {
        symmetric = build_symmetric_scb(reg.num_qubits());
        basis = &symmetric;
    }
    std::array<DenseState, 2> image;
    try {
        image = {negate_m(reg.basis[0], *basis), negate_m(reg.basis[1], *basis)};
    } catch (const LeakageError &) {
        throw LeakageError("logical-X unsupported for this codespace");
    }
    LogicalXResult out;
    for (int x = 0; x < 2; x++) {
        DenseState rest = image[x];
        for (int y = 0; y < 2; y++) {
            out.induced(y, x) = reg.basis[y].inner(image[x]);
            rest.amps -= out.induced(y, x) * reg.basis[y].amps;
        }
        if (rest.amps.norm() > 1e-10) {
            throw LeakageError("logical-X unsupported for this codespace");
        }
    }
    Eigen::Matrix2cd pauli;
    pauli << 0, 1, 1, 0;
    out.is_pauli_x = (out.induced - pauli).cwiseAbs().maxCoeff() < 1e-10;
    out.output = reg;
    Eigen::Vector2cd c(reg.payload[0], reg.payload[1]);
    Eigen::Vector2cd t = out.induced * c;
    out.output.payload = {t[0], t[1]};
    return out;
}

LogicalRegister pauli_x(const LogicalRegister &reg) {
    LogicalRegister out = reg;
    std::swap(out.payload[0], out.payload[1]);
    return out;
}

LogicalPair logical_cnot(const LogicalRegister &control, const LogicalRegister &target) {
    control.validate();
    target.validate();
    LogicalPair out;
    out.control_basis = control.basis;
    out.target_basis = target.basis;
    out.amps.setZero();
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            out.amps(x, y ^ x) = control.payload[x] * target.payload[y];
        }
    }
    return out;
}

std::array<double, 2> schmidt_coefficients(const LogicalPair &pair) {
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(pair.amps);
    auto s = svd.singularValues();
    return {s[0], s[1]};
}

nlohmann::json RecoveryOutcome::to_json() const {
    return {
        {"syndrome", {{"j", syndrome.j.str()}, {"twice_j", syndrome.j.twice()}, {"w", syndrome.w}}},
        {"bit", bit},
        {"probability", probability},
        {"corrected", corrected},
        {"correction", correction},
        {"source_payload", complex_pair(source_payload)},
        {"output_payload", complex_pair(output.payload)},
        {"output_qubits", output.num_qubits()},
        {"fidelity", fidelity},
    };
}

LogicalRegister post_recovery_hook(const LogicalRegister &reg) {
    return reg;
}

RecoveryOutcome teleport(const GnuCode &ancilla_code, const GnuCode &source_code, const DenseState &projected,
                         const SyndromeKey &s, uint64_t seed, const std::optional<LogicalQubit> &expected) {
    if (ancilla_code.g() != source_code.g()) {
        throw std::invalid_argument("ancilla gap g = " + std::to_string(ancilla_code.g()) +
                                    " must equal the code gap g = " + std::to_string(source_code.g()));
    }
    DenseState psi = projected.normalized();
    LogicalRegister b;
    b.basis = codespace_basis(source_code, s, psi);
    b.payload = {b.basis[0].inner(psi), b.basis[1].inner(psi)};
    if ((psi.amps - b.state().amps).norm() > kLeakageTolerance) {
        throw LeakageError("projected state leaks out of the codespace of syndrome " + s.str());
    }
    double scale = std::sqrt(std::norm(b.payload[0]) + std::norm(b.payload[1]));
    b.payload = {b.payload[0] / scale, b.payload[1] / scale};

    // The readout classes must resolve the reconstructed codewords.
    for (int y = 0; y < 2; y++) {
        if (logical_z_distribution(b.basis[y], source_code, s).probability[y] < 1 - 1e-10) {
            throw LeakageError("logical-Z readout does not resolve codeword " + std::to_string(y));
        }
    }

    double h = 1 / std::sqrt(2.0);
    LogicalRegister a = LogicalRegister::from_code(ancilla_code, LogicalQubit::make(h, h));
    LogicalPair pair = logical_cnot(a, b);

    std::vector<double> probs(2);
    for (int y = 0; y < 2; y++) {
        probs[y] = std::norm(pair.amps(0, y)) + std::norm(pair.amps(1, y));
    }
    Rng rng(seed);
    int y = static_cast<int>(sample_index(probs, rng));

    RecoveryOutcome out;
    out.syndrome = s;
    out.bit = y;
    out.probability = probs[y];
    out.source_payload = b.payload;
    double norm = std::sqrt(probs[y]);
    a.payload = {pair.amps(0, y) / norm, pair.amps(1, y) / norm};
    if (y == 1) {
        out.corrected = true;
        try {
            LogicalXResult phys = logical_x(a);
            if (phys.is_pauli_x) {
                a = phys.output;
                out.correction = "m_negation";
            }
        } catch (const LeakageError &) {
        }
        if (out.correction == "none") {
            a = pauli_x(a);
            out.correction = "codespace_x";
        }
    }
    out.output = post_recovery_hook(a);

    LogicalQubit reference = expected ? *expected : LogicalQubit{b.payload[0], b.payload[1]};
    DenseState target = to_dense(beta_coefficients(ancilla_code, reference));
    out.fidelity = std::min(1.0, std::norm(out.output.state().inner(target)));
    return out;
}

}  // namespace insqec
