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

#include "insqec/states.h"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "insqec/errors.h"
#include "insqec/exact.h"

namespace insqec {

int max_dense_qubits() {
    if (const char *env = std::getenv("INSQEC_MAX_QUBITS")) {
        int v = std::atoi(env);
        if (v > 0 && v <= 30) {
            return v;
        }
    }
    return 14;
}

void require_dense_capacity(int num_qubits, const char *what) {
    if (num_qubits < 0) {
        throw std::invalid_argument(std::string(what) + ": negative qubit count");
    }
    if (num_qubits > max_dense_qubits()) {
        throw ResourceError(std::string(what) + ": " + std::to_string(num_qubits) + " qubits exceeds the cap of " +
                            std::to_string(max_dense_qubits()) + " (set INSQEC_MAX_QUBITS to override)");
    }
}

GnuCode::GnuCode(int g, int n, int u) : g_(g), n_(n), u_(u) {
    if (g < 2) {
        throw std::invalid_argument("code gap g must satisfy g >= 2, got " + std::to_string(g));
    }
    if (n < 2) {
        throw std::invalid_argument("occupancy n must satisfy n >= 2, got " + std::to_string(n));
    }
    if (u < 1) {
        throw std::invalid_argument("scaling u must satisfy u >= 1, got " + std::to_string(u));
    }
}

QubitAmplitudes QubitAmplitudes::make(Complex c0, Complex c1) {
    double total = std::norm(c0) + std::norm(c1);
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("qubit amplitudes not normalized: |a0|^2 + |a1|^2 = " + std::to_string(total));
    }
    return {c0, c1};
}

double WeightState::norm_squared() const {
    double total = 0;
    for (const auto &[k, a] : amps) {
        total += std::norm(a);
    }
    return total;
}

DenseState DenseState::zero(int num_qubits) {
    return {num_qubits, Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits)};
}

DenseState DenseState::basis(int num_qubits, uint64_t index) {
    DenseState s = zero(num_qubits);
    s.amps[static_cast<Eigen::Index>(index)] = 1;
    return s;
}

DenseState DenseState::normalized() const {
    double n = amps.norm();
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero state");
    }
    return {num_qubits, amps / n};
}

Complex DenseState::inner(const DenseState &other) const {
    if (other.num_qubits != num_qubits) {
        throw std::invalid_argument("inner product between states on different qubit counts");
    }
    return amps.dot(other.amps);
}

std::map<int, double> DenseState::weight_histogram(double cutoff) const {
    std::map<int, double> out;
    for (Eigen::Index i = 0; i < amps.size(); i++) {
        double p = std::norm(amps[i]);
        if (p > cutoff) {
            out[hamming_weight(static_cast<uint64_t>(i))] += p;
        }
    }
    return out;
}

int hamming_weight(uint64_t x) {
    return std::popcount(x);
}

DenseState dicke(int M, int k) {
    require_dense_capacity(M, "dicke");
    if (k < 0 || k > M) {
        throw std::out_of_range("Dicke weight " + std::to_string(k) + " outside 0.." + std::to_string(M));
    }
    DenseState s = DenseState::zero(M);
    double amp = 1.0 / std::sqrt(to_double(Rational(binomial(M, k))));
    for (Eigen::Index i = 0; i < s.amps.size(); i++) {
        if (hamming_weight(static_cast<uint64_t>(i)) == k) {
            s.amps[i] = amp;
        }
    }
    return s;
}

DenseState to_dense(const WeightState &state) {
    require_dense_capacity(state.num_qubits, "to_dense");
    DenseState s = DenseState::zero(state.num_qubits);
    std::vector<double> scale(state.num_qubits + 1, 0.0);
    for (const auto &[k, a] : state.amps) {
        if (k < 0 || k > state.num_qubits) {
            throw std::out_of_range("weight key " + std::to_string(k) + " outside 0.." +
                                    std::to_string(state.num_qubits));
        }
        scale[k] = 1.0 / std::sqrt(to_double(Rational(binomial(state.num_qubits, k))));
    }
    for (Eigen::Index i = 0; i < s.amps.size(); i++) {
        auto it = state.amps.find(hamming_weight(static_cast<uint64_t>(i)));
        if (it != state.amps.end()) {
            s.amps[i] = it->second * scale[it->first];
        }
    }
    return s;
}

WeightState logical_codeword(const GnuCode &code, int x) {
    if (x != 0 && x != 1) {
        throw std::invalid_argument("logical bit must be 0 or 1");
    }
    WeightState out;
    out.num_qubits = code.num_qubits();
    double prefactor = std::pow(2.0, -(code.n() - 1) / 2.0);
    // binom(n, i) vanishes for i > n, so only 0 <= i <= n contributes.
    for (int i = x; i <= code.n(); i += 2) {
        out.amps[code.g() * i] = prefactor * std::sqrt(to_double(Rational(binomial(code.n(), i))));
    }
    return out;
}

WeightState beta_coefficients(const GnuCode &code, const LogicalQubit &q) {
    WeightState out;
    out.num_qubits = code.num_qubits();
    for (int x = 0; x < 2; x++) {
        for (const auto &[k, a] : logical_codeword(code, x).amps) {
            out.amps[k] = q[x] * a;
        }
    }
    return out;
}

DenseState encode(const GnuCode &code, const LogicalQubit &q) {
    if (code.num_qubits() + 1 > max_dense_qubits()) {
        throw ResourceError("encode: N = " + std::to_string(code.num_qubits()) +
                            " leaves no room for an inserted qubit under the cap of " +
                            std::to_string(max_dense_qubits()));
    }
    return to_dense(beta_coefficients(code, q));
}

DenseState swap_qubits(const DenseState &state, int a, int b) {
    if (a < 0 || b < 0 || a >= state.num_qubits || b >= state.num_qubits) {
        throw std::out_of_range("swap_qubits: qubit index out of range");
    }
    DenseState out = DenseState::zero(state.num_qubits);
    for (Eigen::Index i = 0; i < state.amps.size(); i++) {
        uint64_t x = static_cast<uint64_t>(i);
        uint64_t ba = (x >> a) & 1, bb = (x >> b) & 1;
        uint64_t y = x;
        if (ba != bb) {
            y ^= (uint64_t{1} << a) | (uint64_t{1} << b);
        }
        out.amps[static_cast<Eigen::Index>(y)] = state.amps[i];
    }
    return out;
}

nlohmann::json to_json(const DenseState &state) {
    nlohmann::json amps = nlohmann::json::array();
    for (Eigen::Index i = 0; i < state.amps.size(); i++) {
        if (std::abs(state.amps[i]) >= 1e-14) {
            amps.push_back({i, state.amps[i].real(), state.amps[i].imag()});
        }
    }
    return {{"num_qubits", state.num_qubits}, {"amps", amps}};
}

nlohmann::json to_json(const WeightState &state) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto &[k, a] : state.amps) {
        if (std::abs(a) >= 1e-14) {
            amps.push_back({k, a.real(), a.imag()});
        }
    }
    return {{"num_qubits", state.num_qubits}, {"amps", amps}};
}

DenseState dense_state_from_json(const nlohmann::json &j) {
    DenseState s = DenseState::zero(j.at("num_qubits").get<int>());
    for (const auto &entry : j.at("amps")) {
        auto index = entry.at(0).get<int64_t>();
        if (index < 0 || index >= s.amps.size()) {
            throw std::out_of_range("basis index out of range in serialized state");
        }
        s.amps[index] = Complex(entry.at(1).get<double>(), entry.at(2).get<double>());
    }
    return s;
}

WeightState weight_state_from_json(const nlohmann::json &j) {
    WeightState s;
    s.num_qubits = j.at("num_qubits").get<int>();
    for (const auto &entry : j.at("amps")) {
        int k = entry.at(0).get<int>();
        if (k < 0 || k > s.num_qubits) {
            throw std::out_of_range("weight key out of range in serialized state");
        }
        s.amps[k] = Complex(entry.at(1).get<double>(), entry.at(2).get<double>());
    }
    return s;
}

}  // namespace insqec
