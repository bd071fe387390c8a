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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>

#include "json.hpp"

namespace insqec {

using Complex = std::complex<double>;

/// Upper bound on dense state size. Defaults to 14 qubits; the environment
/// variable INSQEC_MAX_QUBITS overrides it.
int max_dense_qubits();

/// Throws ResourceError when num_qubits exceeds max_dense_qubits().
void require_dense_capacity(int num_qubits, const char *what);

/// Parameters of a gnu permutation-invariant code on N = g*n*u qubits.
class GnuCode {
   public:
    /// Throws std::invalid_argument unless g >= 2, n >= 2, u >= 1.
    GnuCode(int g, int n, int u);

    int g() const {
        return g_;
    }
    int n() const {
        return n_;
    }
    int u() const {
        return u_;
    }
    int num_qubits() const {
        return g_ * n_ * u_;
    }
    int distance() const {
        return g_ < n_ ? g_ : n_;
    }

    bool operator==(const GnuCode &) const = default;

   private:
    int g_;
    int n_;
    int u_;
};

/// Normalized pair of amplitudes (c0, c1) or (v0, v1).
struct QubitAmplitudes {
    Complex c0;
    Complex c1;

    /// Throws std::invalid_argument when |c0|^2 + |c1|^2 differs from 1 by
    /// more than 1e-12.
    static QubitAmplitudes make(Complex c0, Complex c1);

    Complex operator[](int x) const {
        return x == 0 ? c0 : c1;
    }
};

/// Logical payload c0|0> + c1|1>.
using LogicalQubit = QubitAmplitudes;

/// Amplitudes on Dicke states |D^M_k>, keyed by weight k.
struct WeightState {
    int num_qubits = 0;
    std::map<int, Complex> amps;

    double norm_squared() const;
};

/// Full 2^M computational-basis amplitude vector. Bit l of the basis index is
/// qubit l, and bit value 1 counts toward the Hamming weight.
struct DenseState {
    int num_qubits = 0;
    Eigen::VectorXcd amps;

    static DenseState zero(int num_qubits);
    static DenseState basis(int num_qubits, uint64_t index);

    std::size_t dim() const {
        return static_cast<std::size_t>(amps.size());
    }
    double norm_squared() const {
        return amps.squaredNorm();
    }
    DenseState normalized() const;
    Complex inner(const DenseState &other) const;  // <this|other>
    /// Squared norm carried by each Hamming weight.
    std::map<int, double> weight_histogram(double cutoff = 1e-14) const;
};

int hamming_weight(uint64_t x);

/// |D^M_k> as a dense vector.
DenseState dicke(int M, int k);

DenseState to_dense(const WeightState &state);

/// The gnu codeword |x_L> as Dicke amplitudes.
WeightState logical_codeword(const GnuCode &code, int x);

/// Dicke amplitudes beta_k of c0|0_L> + c1|1_L>.
WeightState beta_coefficients(const GnuCode &code, const LogicalQubit &q);

/// Dense N-qubit encoded state. N must be at most max_dense_qubits() - 1 so
/// that the post-insertion state still fits.
DenseState encode(const GnuCode &code, const LogicalQubit &q);

/// Swap qubits a and b.
DenseState swap_qubits(const DenseState &state, int a, int b);

/// {"num_qubits": M, "amps": [[index, re, im], ...]}, entries with
/// |amp| < 1e-14 omitted.
nlohmann::json to_json(const DenseState &state);
nlohmann::json to_json(const WeightState &state);
DenseState dense_state_from_json(const nlohmann::json &j);
WeightState weight_state_from_json(const nlohmann::json &j);

}  // namespace insqec
