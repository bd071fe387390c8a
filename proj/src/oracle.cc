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

#include "insqec/oracle.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "insqec/errors.h"

namespace insqec {

namespace {

const Complex kI(0, 1);

void require_operator_capacity(int M, const char *what) {
    if (M > kMaxDenseOperatorQubits) {
        throw ResourceError(std::string(what) + ": dense operators are limited to " +
                            std::to_string(kMaxDenseOperatorQubits) + " qubits, got " + std::to_string(M));
    }
    require_dense_capacity(M, what);
}

DenseOperator from_columns(int M, const std::function<DenseState(const DenseState &)> &op) {
    Eigen::Index dim = Eigen::Index{1} << M;
    DenseOperator out{M, Eigen::MatrixXcd(dim, dim)};
    for (Eigen::Index c = 0; c < dim; c++) {
        out.matrix.col(c) = op(DenseState::basis(M, static_cast<uint64_t>(c))).amps;
    }
    return out;
}

double lambda(HalfInt j) {
    return j.value() * (j.value() + 1);
}

}  // namespace

bool DenseOperator::is_hermitian(double tol) const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() < tol;
}

DenseState DenseOperator::apply(const DenseState &state) const {
    if (state.num_qubits != num_qubits) {
        throw std::invalid_argument("operator and state qubit counts differ");
    }
    return {num_qubits, matrix * state.amps};
}

DenseState apply_jx(const DenseState &s) {
    DenseState out = DenseState::zero(s.num_qubits);
    for (Eigen::Index x = 0; x < s.amps.size(); x++) {
        Complex a = s.amps[x];
        for (int l = 0; l < s.num_qubits; l++) {
            out.amps[x ^ (Eigen::Index{1} << l)] += 0.5 * a;
        }
    }
    return out;
}

DenseState apply_jy(const DenseState &s) {
    // <1|Sy|0> = -i/2, <0|Sy|1> = +i/2.
    DenseState out = DenseState::zero(s.num_qubits);
    for (Eigen::Index x = 0; x < s.amps.size(); x++) {
        Complex a = s.amps[x];
        for (int l = 0; l < s.num_qubits; l++) {
            Eigen::Index bit = Eigen::Index{1} << l;
            if (x & bit) {
                out.amps[x ^ bit] += 0.5 * kI * a;
            } else {
                out.amps[x | bit] += -0.5 * kI * a;
            }
        }
    }
    return out;
}

DenseState apply_jz(const DenseState &s) {
    DenseState out = s;
    double half_m = s.num_qubits / 2.0;
    for (Eigen::Index x = 0; x < s.amps.size(); x++) {
        out.amps[x] *= hamming_weight(static_cast<uint64_t>(x)) - half_m;
    }
    return out;
}

DenseState apply_j_plus(const DenseState &s) {
    DenseState out = DenseState::zero(s.num_qubits);
    for (Eigen::Index x = 0; x < s.amps.size(); x++) {
        for (int l = 0; l < s.num_qubits; l++) {
            Eigen::Index bit = Eigen::Index{1} << l;
            if (!(x & bit)) {
                out.amps[x | bit] += s.amps[x];
            }
        }
    }
    return out;
}

DenseState apply_j_minus(const DenseState &s) {
    DenseState out = DenseState::zero(s.num_qubits);
    for (Eigen::Index x = 0; x < s.amps.size(); x++) {
        for (int l = 0; l < s.num_qubits; l++) {
            Eigen::Index bit = Eigen::Index{1} << l;
            if (x & bit) {
                out.amps[x ^ bit] += s.amps[x];
            }
        }
    }
    return out;
}

DenseState apply_j_squared(const DenseState &s) {
    DenseState out = apply_jx(apply_jx(s));
    out.amps += apply_jy(apply_jy(s)).amps;
    out.amps += apply_jz(apply_jz(s)).amps;
    return out;
}

DenseOperator j_x(int M) {
    require_operator_capacity(M, "j_x");
    return from_columns(M, apply_jx);
}

DenseOperator j_y(int M) {
    require_operator_capacity(M, "j_y");
    return from_columns(M, apply_jy);
}

DenseOperator j_z(int M) {
    require_operator_capacity(M, "j_z");
    return from_columns(M, apply_jz);
}

DenseOperator j_squared(int M) {
    require_operator_capacity(M, "j_squared");
    return from_columns(M, apply_j_squared);
}

std::vector<HalfInt> allowed_total_j(int M) {
    std::vector<HalfInt> out;
    for (int twice = M; twice >= 0; twice -= 2) {
        out.push_back(HalfInt::from_twice(twice));
    }
    return out;
}

bool is_allowed_total_j(int M, HalfInt j) {
    return j.twice() >= 0 && j.twice() <= M && (M - j.twice()) % 2 == 0;
}

DenseState apply_total_j_projector(const DenseState &state, HalfInt j) {
    if (!is_allowed_total_j(state.num_qubits, j)) {
        throw std::invalid_argument("total angular momentum " + j.str() + " not allowed on " +
                                    std::to_string(state.num_qubits) + " qubits");
    }
    DenseState out = state;
    double target = lambda(j);
    for (HalfInt other : allowed_total_j(state.num_qubits)) {
        if (other == j) {
            continue;
        }
        double mu = lambda(other);
        DenseState next = apply_j_squared(out);
        next.amps -= mu * out.amps;
        next.amps /= target - mu;
        out = std::move(next);
    }
    return out;
}

DenseOperator total_j_projector(int M, HalfInt j) {
    require_operator_capacity(M, "total_j_projector");
    return from_columns(M, [j](const DenseState &s) {
        return apply_total_j_projector(s, j);
    });
}

namespace {

Projection finish(DenseState projected) {
    Projection out;
    out.probability = projected.norm_squared();
    if (out.probability < kZeroBranchCutoff) {
        out.state = DenseState::zero(projected.num_qubits);
        out.zero_branch = true;
    } else {
        out.state = projected.normalized();
        out.zero_branch = false;
    }
    return out;
}

}  // namespace

Projection project_total_j(const DenseState &state, HalfInt j) {
    return finish(apply_total_j_projector(state, j));
}

int w_class(int M, HalfInt j, int k, int g) {
    // j + m = j + k - M/2, an integer whenever j is allowed for M.
    int j_plus_m = (j + HalfInt::from_twice(2 * k - M)).as_integer();
    return ((j_plus_m % g) + g) % g;
}

DenseState apply_w_projector(const DenseState &state, HalfInt j, int g, int w) {
    if (g < 1 || w < 0 || w >= g) {
        throw std::out_of_range("w = " + std::to_string(w) + " outside 0.." + std::to_string(g - 1));
    }
    if (!is_allowed_total_j(state.num_qubits, j)) {
        throw std::invalid_argument("total angular momentum " + j.str() + " not allowed");
    }
    DenseState out = DenseState::zero(state.num_qubits);
    for (Eigen::Index x = 0; x < state.amps.size(); x++) {
        if (w_class(state.num_qubits, j, hamming_weight(static_cast<uint64_t>(x)), g) == w) {
            out.amps[x] = state.amps[x];
        }
    }
    return out;
}

double sector_residual(const DenseState &state, HalfInt j) {
    DenseState r = apply_j_squared(state);
    r.amps -= lambda(j) * state.amps;
    return r.amps.norm();
}

Projection project_w_mod_g(const DenseState &state, HalfInt j, int g, int w) {
    if (w < 0 || w >= g) {
        throw std::out_of_range("w = " + std::to_string(w) + " outside 0.." + std::to_string(g - 1));
    }
    double residual = sector_residual(state, j);
    if (residual > 1e-9 * std::max(1.0, state.amps.norm())) {
        throw LeakageError("state is not inside the total-j = " + j.str() + " sector (residual " +
                           std::to_string(residual) + ")");
    }
    return finish(apply_w_projector(state, j, g, w));
}

ProjectorSet total_j_projectors(int M) {
    ProjectorSet out;
    for (HalfInt j : allowed_total_j(M)) {
        out.push_back({"j=" + j.str(), [j](const DenseState &s) {
                           return apply_total_j_projector(s, j);
                       }});
    }
    return out;
}

ProjectorSet w_projectors(HalfInt j, int g) {
    ProjectorSet out;
    for (int w = 0; w < g; w++) {
        out.push_back({"w=" + std::to_string(w), [j, g, w](const DenseState &s) {
                           return apply_w_projector(s, j, g, w);
                       }});
    }
    return out;
}

namespace {

std::vector<DenseState> project_all(const DenseState &state, const ProjectorSet &projectors) {
    std::vector<DenseState> pieces;
    DenseState total = DenseState::zero(state.num_qubits);
    for (const auto &p : projectors) {
        pieces.push_back(p.apply(state));
        total.amps += pieces.back().amps;
    }
    double gap = (total.amps - state.amps).norm();
    if (gap > 1e-10 * std::max(1.0, state.amps.norm())) {
        throw std::invalid_argument("projector set is incomplete: pieces miss the state by " + std::to_string(gap));
    }
    return pieces;
}

}  // namespace

std::vector<double> born_probabilities(const DenseState &state, const ProjectorSet &projectors) {
    std::vector<double> probs;
    for (const auto &piece : project_all(state, projectors)) {
        probs.push_back(piece.norm_squared());
    }
    return probs;
}

std::size_t sample_index(const std::vector<double> &probabilities, Rng &rng) {
    double total = 0;
    for (double p : probabilities) {
        total += p;
    }
    double r = rng.uniform() * total;
    double acc = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probabilities.size(); i++) {
        if (probabilities[i] <= 0) {
            continue;
        }
        last_nonzero = i;
        acc += probabilities[i];
        if (r < acc) {
            return i;
        }
    }
    return last_nonzero;
}

MeasurementRecord born_sample(const DenseState &state, const ProjectorSet &projectors, Rng &rng) {
    auto pieces = project_all(state, projectors);
    std::vector<double> probs;
    for (const auto &piece : pieces) {
        probs.push_back(piece.norm_squared());
    }
    std::size_t k = sample_index(probs, rng);
    MeasurementRecord rec;
    rec.label = projectors[k].label;
    rec.outcome = k;
    rec.probability = probs[k] / state.norm_squared();
    rec.post_state = pieces[k].normalized();
    return rec;
}

MeasurementRecord born_sample(const DenseState &state, const ProjectorSet &projectors, uint64_t seed) {
    Rng rng(seed);
    return born_sample(state, projectors, rng);
}

}  // namespace insqec
