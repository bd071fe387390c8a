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

#include "insqec/scb.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "insqec/cg.h"
#include "insqec/errors.h"
#include "insqec/oracle.h"

namespace insqec {

void CouplingPath::validate() const {
    if (steps.empty() || steps.front() != kHalf) {
        throw std::invalid_argument("coupling path must start at 1/2");
    }
    for (std::size_t i = 1; i < steps.size(); i++) {
        HalfInt diff = (steps[i] - steps[i - 1]).abs();
        if (diff != kHalf || steps[i] < HalfInt()) {
            throw std::invalid_argument("coupling path step " + std::to_string(i) + " is not a valid 1/2 move");
        }
    }
}

std::vector<int> CouplingPath::twice_values() const {
    std::vector<int> out;
    for (HalfInt h : steps) {
        out.push_back(h.twice());
    }
    return out;
}

bool CouplingPath::operator<(const CouplingPath &other) const {
    return twice_values() < other.twice_values();
}

std::vector<CouplingPath> enumerate_paths(int M) {
    if (M < 1) {
        throw std::invalid_argument("coupling paths need at least one qubit");
    }
    std::vector<CouplingPath> level{{{kHalf}}};
    for (int i = 1; i < M; i++) {
        std::vector<CouplingPath> next;
        for (const auto &p : level) {
            for (int dir : {-1, +1}) {
                HalfInt j = p.total() + HalfInt::from_twice(dir);
                if (j < HalfInt()) {
                    continue;
                }
                CouplingPath q = p;
                q.steps.push_back(j);
                next.push_back(std::move(q));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

uint64_t multiplicity(int M, HalfInt j) {
    if (M < 1 || !is_allowed_total_j(M, j)) {
        return 0;
    }
    // counts[t] = number of paths currently at twice-j = t.
    std::vector<uint64_t> counts(M + 2, 0);
    counts[1] = 1;
    for (int i = 1; i < M; i++) {
        std::vector<uint64_t> next(M + 2, 0);
        for (int t = 0; t <= M; t++) {
            if (!counts[t]) {
                continue;
            }
            next[t + 1] += counts[t];
            if (t >= 1) {
                next[t - 1] += counts[t];
            }
        }
        counts = std::move(next);
    }
    return counts[j.twice()];
}

std::vector<std::size_t> ScbBasis::paths_ending_at(HalfInt j) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < paths_.size(); p++) {
        if (paths_[p].total() == j) {
            out.push_back(p);
        }
    }
    return out;
}

const DenseState &ScbBasis::state(std::size_t path, HalfInt m) const {
    if (path >= paths_.size()) {
        throw std::out_of_range("path index out of range");
    }
    HalfInt j = paths_[path].total();
    if (m.abs() > j || !m.same_parity(j)) {
        throw std::out_of_range("m = " + m.str() + " not valid for j = " + j.str());
    }
    return states_[path][(j - m).as_integer()];
}

std::size_t ScbBasis::size() const {
    std::size_t total = 0;
    for (const auto &row : states_) {
        total += row.size();
    }
    return total;
}

std::map<std::pair<std::size_t, int>, Complex> ScbBasis::expand(const DenseState &psi, double cutoff) const {
    if (psi.num_qubits != num_qubits_) {
        throw std::invalid_argument("state and basis qubit counts differ");
    }
    std::map<std::pair<std::size_t, int>, Complex> out;
    for (std::size_t p = 0; p < paths_.size(); p++) {
        HalfInt j = paths_[p].total();
        for (std::size_t i = 0; i < states_[p].size(); i++) {
            HalfInt m = j - HalfInt::integer(static_cast<int>(i));
            Complex c = states_[p][i].inner(psi);
            if (std::abs(c) > cutoff) {
                out[{p, m.twice()}] = c;
            }
        }
    }
    return out;
}

Eigen::MatrixXcd ScbBasis::sector_projector(HalfInt j) const {
    Eigen::Index dim = Eigen::Index{1} << num_qubits_;
    std::vector<const DenseState *> vectors;
    for (std::size_t p : paths_ending_at(j)) {
        for (const auto &s : states_[p]) {
            vectors.push_back(&s);
        }
    }
    Eigen::MatrixXcd V(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t c = 0; c < vectors.size(); c++) {
        V.col(static_cast<Eigen::Index>(c)) = vectors[c]->amps;
    }
    return V * V.adjoint();
}

ScbBasis build_scb(int M) {
    if (M > kMaxScbQubits) {
        throw ResourceError("build_scb: full basis limited to " + std::to_string(kMaxScbQubits) + " qubits, got " +
                            std::to_string(M));
    }
    require_dense_capacity(M, "build_scb");
    if (M < 1) {
        throw std::invalid_argument("build_scb needs at least one qubit");
    }

    std::map<std::vector<int>, double> cg_cache;
    auto coupling = [&](HalfInt j1, HalfInt m1, HalfInt m2, HalfInt j, HalfInt m) {
        std::vector<int> key{j1.twice(), m1.twice(), m2.twice(), j.twice(), m.twice()};
        auto it = cg_cache.find(key);
        if (it != cg_cache.end()) {
            return it->second;
        }
        double v = cg({j1, m1, kHalf, m2, j, m});
        cg_cache.emplace(key, v);
        return v;
    };

    std::vector<CouplingPath> paths{{{kHalf}}};
    std::vector<std::vector<DenseState>> states{{DenseState::basis(1, 1), DenseState::basis(1, 0)}};

    for (int i = 1; i < M; i++) {
        std::vector<CouplingPath> next_paths;
        std::vector<std::vector<DenseState>> next_states;
        for (std::size_t p = 0; p < paths.size(); p++) {
            HalfInt jp = paths[p].total();
            for (int dir : {-1, +1}) {
                HalfInt j = jp + HalfInt::from_twice(dir);
                if (j < HalfInt()) {
                    continue;
                }
                CouplingPath q = paths[p];
                q.steps.push_back(j);
                std::vector<DenseState> multiplet;
                for (HalfInt m = j; m >= -j; m -= HalfInt::integer(1)) {
                    DenseState v = DenseState::zero(i + 1);
                    Eigen::Index half = Eigen::Index{1} << i;
                    for (HalfInt m2 : {kHalf, -kHalf}) {
                        HalfInt m1 = m - m2;
                        if (m1.abs() > jp) {
                            continue;
                        }
                        double c = coupling(jp, m1, m2, j, m);
                        if (c == 0) {
                            continue;
                        }
                        const DenseState &prev = states[p][(jp - m1).as_integer()];
                        // The new qubit is the highest bit.
                        Eigen::Index offset = m2 > HalfInt() ? half : 0;
                        v.amps.segment(offset, half) += c * prev.amps;
                    }
                    multiplet.push_back(std::move(v));
                }
                next_paths.push_back(std::move(q));
                next_states.push_back(std::move(multiplet));
            }
        }
        paths = std::move(next_paths);
        states = std::move(next_states);
    }

    std::vector<std::size_t> order(paths.size());
    for (std::size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return paths[a] < paths[b];
    });

    ScbBasis out;
    out.num_qubits_ = M;
    out.complete_ = true;
    for (std::size_t i : order) {
        out.paths_.push_back(std::move(paths[i]));
        out.states_.push_back(std::move(states[i]));
    }
    return out;
}

ScbBasis build_symmetric_scb(int M) {
    require_dense_capacity(M, "build_symmetric_scb");
    if (M < 1) {
        throw std::invalid_argument("build_symmetric_scb needs at least one qubit");
    }
    CouplingPath all_up;
    for (int i = 1; i <= M; i++) {
        all_up.steps.push_back(HalfInt::from_twice(i));
    }
    std::vector<DenseState> multiplet;
    for (int k = M; k >= 0; k--) {
        multiplet.push_back(dicke(M, k));
    }
    ScbBasis out;
    out.num_qubits_ = M;
    out.complete_ = M == 1;
    out.paths_.push_back(std::move(all_up));
    out.states_.push_back(std::move(multiplet));
    return out;
}

std::map<std::size_t, Complex> overlap_coefficients(const DenseState &psi, const ScbBasis &basis, HalfInt j,
                                                    HalfInt m) {
    if (psi.num_qubits != basis.num_qubits()) {
        throw std::invalid_argument("state and basis qubit counts differ");
    }
    int k = (m + HalfInt::from_twice(psi.num_qubits)).twice() / 2;
    if (m.abs() > j || !m.same_parity(j) || k < 0 || k > psi.num_qubits) {
        throw std::invalid_argument("invalid (j, m) = (" + j.str() + ", " + m.str() + ")");
    }
    double off_weight = 0;
    for (Eigen::Index x = 0; x < psi.amps.size(); x++) {
        if (hamming_weight(static_cast<uint64_t>(x)) != k) {
            off_weight += std::norm(psi.amps[x]);
        }
    }
    double scale = std::max(1.0, psi.amps.norm());
    if (std::sqrt(off_weight) > 1e-10 * scale || sector_residual(psi, j) > 1e-9 * scale) {
        throw LeakageError("state lies outside the (j, m) = (" + j.str() + ", " + m.str() + ") eigenspace");
    }
    std::vector<std::size_t> ps = basis.paths_ending_at(j);
    if (ps.empty()) {
        throw std::invalid_argument("basis has no paths ending at j = " + j.str());
    }
    std::map<std::size_t, Complex> out;
    for (std::size_t p : ps) {
        out[p] = basis.state(p, m).inner(psi);
    }
    return out;
}

DenseState negate_m(const DenseState &psi, const ScbBasis &basis) {
    if (psi.num_qubits != basis.num_qubits()) {
        throw std::invalid_argument("state and basis qubit counts differ");
    }
    if (!basis.complete()) {
        HalfInt top = HalfInt::from_twice(psi.num_qubits);
        if (sector_residual(psi, top) > 1e-9 * std::max(1.0, psi.amps.norm())) {
            throw LeakageError("negate_m without a full basis needs a symmetric state");
        }
        // Dicke states are real and positive in the coupled basis, so the
        // mirror k -> M - k is the global bit flip.
        DenseState out = DenseState::zero(psi.num_qubits);
        Eigen::Index mask = psi.amps.size() - 1;
        for (Eigen::Index x = 0; x < psi.amps.size(); x++) {
            out.amps[x ^ mask] = psi.amps[x];
        }
        return out;
    }
    DenseState out = DenseState::zero(psi.num_qubits);
    for (const auto &[key, c] : basis.expand(psi)) {
        out.amps += c * basis.state(key.first, HalfInt::from_twice(-key.second)).amps;
    }
    return out;
}

nlohmann::json to_json(const ScbBasis &basis) {
    nlohmann::json states = nlohmann::json::array();
    for (std::size_t p = 0; p < basis.paths().size(); p++) {
        HalfInt j = basis.paths()[p].total();
        for (HalfInt m = j; m >= -j; m -= HalfInt::integer(1)) {
            nlohmann::json entry;
            entry["twice_j"] = j.twice();
            entry["twice_m"] = m.twice();
            entry["path"] = basis.paths()[p].twice_values();
            entry["amps"] = to_json(basis.state(p, m))["amps"];
            states.push_back(std::move(entry));
        }
    }
    return {{"num_qubits", basis.num_qubits()}, {"states", states}};
}

}  // namespace insqec
